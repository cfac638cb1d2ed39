import abc
import json
import typing
from enum import Enum, EnumMeta
from typing import TypeVar, Any

from ..exceptions.parseexc import JsonSchemaException, InputParseException

TSelfJsonModel = TypeVar("TSelfJsonModel", bound="JsonModel")
"""The concrete :class:`JsonModel` subclass a classmethod such as :meth:`JsonModel.from_json_text` is called on,
and therefore returns."""

TJsonShape = typing.TypeVar("TJsonShape")
"""The parsed JSON shape a :class:`JsonModel` subclass is built from (a :class:`dict` for points and reports, a
:class:`str` for enums). Data of any other shape is rejected with :exc:`JsonSchemaException`."""


#: :meta private:
class _EnumABCMeta(EnumMeta, abc.ABCMeta):
    pass


class JsonModel(abc.ABC, typing.Generic[TJsonShape]):
    """Base of every value type that is written to (and read back from) the JSON documents of the command line.

    The Generic parameter :obj:`TJsonShape` names the JSON shape :meth:`_from_json_data` accepts; for instance
    :class:`~.SylvesterPoint` reads ``{"sylvester": [...]}`` and :class:`~.FamilyTag` reads a bare string."""
    __slots__ = ()

    @classmethod
    def from_json_text(cls: typing.Type[TSelfJsonModel], text: str) -> TSelfJsonModel:
        """Parses JSON text, then builds an instance with :meth:`_from_json_data`.

        Raises:
            :exc:`InputParseException`: If the text is not JSON at all.
            :exc:`JsonSchemaException`: If the JSON does not have the shape this model expects.
        """
        try:
            data = json.loads(text)
        except json.JSONDecodeError as e:
            raise InputParseException("Malformed/non-JSON data received.") from e
        return cls._from_json_data(data)

    @classmethod
    @abc.abstractmethod
    def _from_json_data(cls: typing.Type[TSelfJsonModel], json_data: TJsonShape) -> TSelfJsonModel:
        """Builds an instance from already-parsed JSON data.

        Args:
            json_data (:obj:`~.TJsonShape`): Parsed data of this model's shape.

        Raises:
            :exc:`JsonSchemaException`: If a field is missing or has the wrong type.
        """
        pass

    @abc.abstractmethod
    def to_json_data(self) -> Any:
        """Converts this value to plain JSON data (dicts, lists, strings, numbers, booleans)."""
        pass


class StrEnumModel(JsonModel[str], Enum, metaclass=_EnumABCMeta):
    """String-valued enums that serialize as their value."""

    @classmethod
    def _from_json_data(cls, json_data: str):
        try:
            return cls(json_data)
        except ValueError as e:
            raise JsonSchemaException(f"Unknown {cls.__name__} value {json_data!r}.") from e

    def to_json_data(self) -> str:
        return self.value

    def __str__(self):
        return self.value
