from .string import parse_coefficients, read_input
from .model import SCHEMA_VERSION, to_json_compatible, dump_document
