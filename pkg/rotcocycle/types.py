from typing import Literal, TypedDict


Letter = int
Letters = tuple[int, ...]
AbelianVector = tuple[int, ...]
Coordinate = float

Precision = Literal["double", "extended", "extended-on-demand"]
OutputFormat = Literal["json", "csv"]
Closure = Literal["cyclic", "based"]

JsonPrimitive = str | int | float | bool | None
JsonArray = list["JsonValue"]
JsonObject = dict[str, "JsonValue"]
JsonValue = JsonPrimitive | JsonArray | JsonObject


class RunOptions(TypedDict, total=False):
    """Options for building a lift context from the package facade.

    All fields are optional.

    Attributes:
        precision: ``"double"`` or ``"extended-on-demand"``.
        eval_budget: Maximum letters per matrix evaluation after Dehn reduction.
        generator_offsets: One integer per generator selecting the lift of that generator.
    """

    precision: Precision
    eval_budget: int
    generator_offsets: tuple[int, ...]
