import io
import json

from src.command import CommandOutput
from src.command.output import write_json, write_tsv
from src.core import Distribution, Marker


def test_tsv_layout():
    output = CommandOutput(Distribution.from_pairs([(0, 0.5), (2, 0.25)], tail=0.25))
    stream = io.StringIO()
    write_tsv(output, {"command": "occur", "n": 3, "exact": True}, stream)
    assert stream.getvalue().splitlines() == [
        "# command=occur",
        "# n=3",
        "# exact=true",
        "0\t0.5",
        "2\t0.25",
        "# tail=0.25",
    ]


def test_tsv_probabilities_read_back_exactly():
    output = CommandOutput(Distribution.from_pairs([(0, 1 / 3), (1, 2 / 3)]))
    stream = io.StringIO()
    write_tsv(output, {}, stream)
    rows = [line.split("\t") for line in stream.getvalue().splitlines() if "\t" in line]
    assert [float(p) for _, p in rows] == [1 / 3, 2 / 3]


def test_tuple_and_marker_values():
    output = CommandOutput(Distribution.from_pairs([((3, 4452), 0.5), (Marker.ENDED, 0.5)]))
    stream = io.StringIO()
    write_tsv(output, {}, stream)
    assert "3,4452\t0.5" in stream.getvalue().splitlines()
    assert "ended\t0.5" in stream.getvalue().splitlines()

    stream = io.StringIO()
    write_json(output, {}, stream)
    assert json.loads(stream.getvalue())["distribution"] == [[[3, 4452], 0.5], ["ended", 0.5]]


def test_json_report_payload():
    output = CommandOutput(Distribution.dirac(1), {"check": "occur"}, {"samples": None})
    stream = io.StringIO()
    write_json(output, dict(output.metadata), stream)
    document = json.loads(stream.getvalue())
    assert document == {
        "metadata": {"check": "occur"},
        "distribution": [[1, 1.0]],
        "tail": 0.0,
        "report": {"samples": None},
    }
