"""
Base class module for all serialisable records in the application.

Every record that reaches a report, a config file or the CLI output inherits
from BaseClass. Field names stay snake_case in Python and in the JSON we
write, but camelCase aliases are accepted on input, so a run configuration
may be written either way.

Example:
    class GeometrySource(BaseClass):
        family: str
        exhaustive_cap: int

    GeometrySource(family="wq", exhaustive_cap=10)       # snake_case
    GeometrySource(family="wq", exhaustiveCap=10)        # camelCase
"""

from pydantic import BaseModel, ConfigDict


def to_camel(string: str) -> str:
    """
    Convert a snake_case string to camelCase.

    Used as an alias generator so that camelCase keys are accepted when
    parsing configuration files.

    Example:
        >>> to_camel("exhaustive_cap")
        'exhaustiveCap'
        >>> to_camel("w_max")
        'wMax'
    """
    components = string.split("_")
    return components[0] + "".join(x.title() for x in components[1:])


class BaseClass(BaseModel):
    """
    Base class for all records in the application.

    Inherits from Pydantic's BaseModel and provides:
    - Automatic camelCase alias generation
    - Bidirectional parsing (accepts both snake_case and camelCase)
    - Type validation and serialization from Pydantic
    """

    model_config = ConfigDict(
        alias_generator=to_camel,
        populate_by_name=True,
    )


class FrozenClass(BaseClass):
    """
    Immutable variant of BaseClass.

    Used for domain values that must not change after construction
    (geometries, field specifications, traces).
    """

    model_config = ConfigDict(
        alias_generator=to_camel,
        populate_by_name=True,
        frozen=True,
    )
