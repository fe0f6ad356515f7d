import json
from enum import Enum
from io import TextIOBase
from typing import Any, Hashable, Literal

from ..core.value_domain import format_value
from .command import CommandOutput

OutputFormat = Literal["tsv", "json"]


def format_metadata(value: Any) -> str:
    if isinstance(value, float):
        return repr(value)
    if isinstance(value, bool):
        return str(value).lower()
    if value is None:
        return "none"
    return str(value)


def json_value(value: Hashable) -> Any:
    if isinstance(value, Enum):
        return value.value
    if isinstance(value, tuple):
        return [json_value(v) for v in value]
    return value


def write_tsv(output: CommandOutput, metadata: dict[str, Any], stream: TextIOBase) -> None:
    """`# key=value` lines, then `value<TAB>probability` rows and the tail.

    Probabilities use repr, the shortest string that reads back to the same float.
    """
    for key, value in metadata.items():
        stream.write(f"# {key}={format_metadata(value)}\n")
    for value, p in output.distribution.items():
        stream.write(f"{format_value(value)}\t{p!r}\n")
    stream.write(f"# tail={output.distribution.tail!r}\n")


def write_json(output: CommandOutput, metadata: dict[str, Any], stream: TextIOBase) -> None:
    document = {
        "metadata": {key: json_value(value) for key, value in metadata.items()},
        "distribution": [[json_value(value), p] for value, p in output.distribution.items()],
        "tail": output.distribution.tail,
    }
    if output.report is not None:
        document["report"] = output.report
    json.dump(document, stream, indent=2)
    stream.write("\n")


WRITERS = {
    "json": write_json,
    "tsv": write_tsv,
}


def write_output(
    output: CommandOutput,
    metadata: dict[str, Any],
    output_format: OutputFormat,
    stream: TextIOBase,
) -> None:
    WRITERS[output_format](output, metadata, stream)
