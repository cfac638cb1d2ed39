import io
import json
from fractions import Fraction

import numpy as np
import pytest

from eckardt.exceptions import InputParseException, RationalParseException
from eckardt.models import FamilyTag, SylvesterPoint
from eckardt.utils import SCHEMA_VERSION, dump_document, parse_coefficients, read_input, to_json_compatible


def test_parse_coefficients():
    assert parse_coefficients("[1 , 2/4, -3]") == [1, Fraction(1, 2), -3]
    with pytest.raises(InputParseException):
        parse_coefficients(" () ")
    with pytest.raises(RationalParseException):
        parse_coefficients("1,,2")


def test_read_input_prefers_files(tmp_path):
    path = tmp_path / "point.json"
    path.write_text(json.dumps({"sylvester": ["1", "2", "3", "4", "5"]}))
    assert read_input(str(path)) == {"sylvester": ["1", "2", "3", "4", "5"]}
    assert read_input("1,2") == [1, 2]


def test_to_json_compatible():
    data = {
        "point": SylvesterPoint([1, Fraction(1, 2), 0, 0, 3]),
        "family": FamilyTag.S1,
        "values": np.array([1.5, 2.0]),
        "z": complex(1, -2),
        "n": np.int64(3),
        "keys": frozenset({"b", "a"}),
    }
    assert to_json_compatible(data) == {
        "point": {"sylvester": ["1", "1/2", "0", "0", "3"]},
        "family": "S1",
        "values": [1.5, 2.0],
        "z": [1.0, -2.0],
        "n": 3,
        "keys": ["a", "b"],
    }


def test_dump_document():
    out = io.StringIO()
    dump_document({"b": Fraction(2, 3), "a": 1}, out, seed=5)
    text = out.getvalue()
    assert text.endswith("}\n")
    assert json.loads(text) == {"a": 1, "b": "2/3", "schema": SCHEMA_VERSION, "seed": 5}
    assert text.index("\"a\"") < text.index("\"b\"") < text.index("\"schema\"")
