import json

import pytest

from src.main import EXIT_RESOURCE_GUARD, EXIT_USAGE, EXIT_VALIDATION, dispatch


def parse_tsv(text: str) -> tuple[dict[str, str], dict[str, float], float]:
    metadata, rows, tail = {}, {}, None
    for line in text.splitlines():
        if line.startswith("# tail="):
            tail = float(line.removeprefix("# tail="))
        elif line.startswith("# "):
            key, value = line[2:].split("=", 1)
            metadata[key] = value
        else:
            value, p = line.split("\t")
            rows[value] = float(p)
    return metadata, rows, tail


def run(capsys, *overrides: str) -> tuple[int, str, str]:
    code = dispatch(["quiet=true", *overrides])
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_occur_defaults(capsys):
    code, out, _ = run(capsys, "command=occur")
    assert code == 0
    metadata, rows, tail = parse_tsv(out)
    assert metadata["command"] == "occur"
    assert metadata["text_model"] == "uniform"
    assert rows["1"] == pytest.approx(0.25, abs=1e-12)
    assert sum(rows.values()) + tail == pytest.approx(1.0, abs=1e-12)


def test_seed_table_row(capsys):
    code, out, _ = run(capsys, "+experiment=seed_table")
    assert code == 0
    metadata, rows, _ = parse_tsv(out)
    assert "text_model" not in metadata
    assert rows["0"] == pytest.approx(6.7331e-6, abs=5e-11)
    assert rows["3"] == pytest.approx(4.1669e-4, abs=5e-9)


@pytest.mark.parametrize("order, length", [("TACG", "6"), ("GTCA", "10")])
def test_flow_table(capsys, order, length):
    code, out, _ = run(capsys, "+experiment=flow_table", f"command.order={order}")
    assert code == 0
    _, rows, tail = parse_tsv(out)
    assert rows == {length: 1.0}
    assert tail == 0.0


def test_first_tryptic_fragment_length(capsys):
    code, out, _ = run(
        capsys,
        "command=mass",
        "text_model=uniform_protein",
        "command.output=length",
        "command.nmax=5",
    )
    assert code == 0
    _, rows, _ = parse_tsv(out)
    assert rows["1"] == pytest.approx(2 / 20 * 19 / 20, abs=1e-12)


def test_json_output(capsys):
    code, out, _ = run(capsys, "command=occur", "format=json")
    assert code == 0
    document = json.loads(out)
    assert document["metadata"]["n"] == 3
    distribution = dict(document["distribution"])
    assert distribution[1] == pytest.approx(0.25, abs=1e-12)
    assert document["tail"] == 0.0


def test_exhaustive_oracle_report(capsys):
    code, out, _ = run(capsys, "command=oracle", "format=json")
    assert code == 0
    document = json.loads(out)
    assert document["metadata"]["passes"] is True
    assert document["report"]["max_abs_deviation"] <= 1e-12


def test_output_is_deterministic(capsys):
    first = run(capsys, "command=wait", "command.tmax=20")
    second = run(capsys, "command=wait", "command.tmax=20")
    assert first == second


def test_output_file(capsys, tmp_path):
    path = tmp_path / "out" / "occur.tsv"
    code, out, _ = run(capsys, "command=occur", f"output={path}")
    assert code == 0
    assert out == ""
    _, rows, _ = parse_tsv(path.read_text())
    assert rows["0"] == pytest.approx(0.75, abs=1e-12)


def test_benchmark_file(capsys, tmp_path):
    path = tmp_path / "benchmark.json"
    code, _, _ = run(capsys, "command=occur", f"benchmark_path={path}")
    assert code == 0
    timings = json.loads(path.read_text())
    assert set(timings) >= {"text_model", "distribution"}
    assert all(len(times) == 1 for times in timings.values())


def test_unknown_command(capsys):
    code, _, err = run(capsys, "command=nope")
    assert code == EXIT_USAGE
    assert err.startswith("paa-error[usage]:")


def test_missing_model_file(capsys, tmp_path):
    code, _, err = run(capsys, "text_model=file", f"text_model.path={tmp_path / 'none.json'}")
    assert code == EXIT_USAGE
    assert "paa-error[usage]" in err


def test_validation_error(capsys):
    code, _, err = run(capsys, "command=occur", "command.n=-1")
    assert code == EXIT_VALIDATION
    assert err.startswith("paa-error[validation]:")


def test_pattern_parse_error(capsys):
    code, _, err = run(
        capsys,
        "command=occur",
        "text_model=uniform_protein",
        "command/pattern=prosite",
        "command.pattern.prosite='C-x(3'",
    )
    assert code == EXIT_VALIDATION
    assert err.startswith("paa-error[pattern-parse]:")


def test_generalized_pattern_from_the_command_line(capsys):
    code, out, _ = run(capsys, "command=occur", "command/pattern=generalized")
    assert code == 0
    _, rows, _ = parse_tsv(out)
    assert rows["1"] == pytest.approx(0.25, abs=1e-12)


def test_prosite_pattern_from_the_command_line(capsys):
    code, out, _ = run(
        capsys,
        "command=occur",
        "text_model=uniform_protein",
        "command/pattern=prosite",
        "command.pattern.prosite=C",
        "command.n=2",
    )
    assert code == 0
    _, rows, _ = parse_tsv(out)
    assert rows["1"] == pytest.approx(2 * 0.05 * 0.95, abs=1e-12)


def test_resource_guard(capsys):
    code, _, err = run(
        capsys,
        "command=algcost",
        "text_model=uniform_dna",
        "command.pattern=ACGTACGTACGT",
        "command.n=12",
    )
    assert code == EXIT_RESOURCE_GUARD
    assert err.startswith("paa-error[resource-guard]:")
