"""Node identity shared by every addressable grammar node"""
import itertools
from typing import NewType

NodeId = NewType("NodeId", int)

_counter = itertools.count(1)


def new_node_id() -> NodeId:
    """Returns an identifier never handed out before in this process"""
    return NodeId(next(_counter))
