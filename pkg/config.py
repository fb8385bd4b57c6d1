"""Application configuration"""
from dataclasses import dataclass, fields, replace


@dataclass(frozen=True)
class AppConfig:
    """Application configuration - Single Source of Truth"""
    language: str = "en"
    # empty: the catalogs shipped next to the code
    locales_dir: str = ""
    verbose: bool = False
    allow_undefined_symbols: bool = False
    anonymous_namespace_prefix: str = "_ns"
    lexical_attribute: str = "lexical"
    start_attribute: str = "start"
    action_attribute: str = "action"
    epsilon_comment: str = "/* empty */"

    def with_overrides(self, **overrides) -> "AppConfig":
        """Copy with the given fields replaced; None values are ignored"""
        known = {f.name for f in fields(self)}
        unknown = set(overrides) - known
        if unknown:
            raise ValueError(f"Unknown configuration fields: {', '.join(sorted(unknown))}")
        return replace(self, **{name: value for name, value in overrides.items() if value is not None})


default_config = AppConfig()
