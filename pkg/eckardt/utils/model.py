__all__ = ("SCHEMA_VERSION", "to_json_compatible", "dump_document")
import json
from fractions import Fraction
from typing import Any, Mapping, Optional, TextIO

import numpy as np

from ..arith.rat import format_rat
from ..models.model_abc import JsonModel

SCHEMA_VERSION = 1
"""Version of every top-level JSON document the command line writes."""


def to_json_compatible(value: Any) -> Any:
    """Recursively converts models, rationals, tuples and sets into plain JSON data.

    Sets become sorted lists; :class:`~fractions.Fraction` values become their ``"p/q"`` strings.

    Examples:
        .. testsetup::

            from fractions import Fraction
            from eckardt.utils import to_json_compatible
        .. doctest::

            >>> to_json_compatible({"x": (Fraction(1, 2), {3, 1})})
            {'x': ['1/2', [1, 3]]}
    """
    if isinstance(value, JsonModel):
        return to_json_compatible(value.to_json_data())
    if isinstance(value, Fraction):
        return format_rat(value)
    if isinstance(value, Mapping):
        return {str(k): to_json_compatible(v) for k, v in value.items()}
    if isinstance(value, (set, frozenset)):
        return [to_json_compatible(v) for v in sorted(value)]
    if isinstance(value, (list, tuple)):
        return [to_json_compatible(v) for v in value]
    if isinstance(value, np.ndarray):
        return [to_json_compatible(v) for v in value.tolist()]
    if isinstance(value, np.generic):
        return to_json_compatible(value.item())
    if isinstance(value, complex):
        return [value.real, value.imag]
    return value


def dump_document(document: Mapping[str, Any], out: TextIO, *, seed: Optional[int] = None) -> None:
    """Writes a top-level document with ``schema`` (and ``seed``, when given), sorted keys and fixed indentation,
    so identical inputs give byte-identical output."""
    payload = dict(to_json_compatible(document))
    payload["schema"] = SCHEMA_VERSION
    if seed is not None:
        payload["seed"] = seed
    json.dump(payload, out, sort_keys=True, indent=2, allow_nan=True)
    out.write("\n")
