"""Infrastructure layer: interface implementations"""
