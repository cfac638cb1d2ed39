from .eckardtexc import (
    EckardtException, InvalidInputException, ComputationException, NumericException, VerificationFailure
)
from .parseexc import InputParseException, RationalParseException, JsonSchemaException
from .computeexc import *
