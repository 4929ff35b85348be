# Copyright (c) 2025 Tsutomu FUNADA
# This software is licensed for:
#   - Non-commercial use under the MIT License (see LICENSE-NC.txt)
#   - Commercial use requires a separate commercial license (contact author)
# You may not use this software for commercial purposes under the MIT License.

import json

import pytest

from app import build_parser, main, to_config
from bin.catalog_summary import summarize
from config import settings
from config.types import EXIT_CODES, REPORT_SCHEMA
from models.errors import ParseError
from services.base_service import render_text
from services.check_sections import foundation_rows, tau_rows
from services.init import tau_h_service


def test_tau_h_prints_identity_object(capsys) -> None:
    status = main(["tau-h", "--algebra", "k_x2", "--object", "0->S"])
    out = capsys.readouterr().out
    assert status == EXIT_CODES["ok"]
    assert "(S = S)_1" in out
    assert "[PASS] tau-h/t2_oracle" in out


def test_tau_of_module(capsys) -> None:
    assert main(["tau", "--algebra", "k_x3", "--module", "U2", "--power", "-2"]) == 0
    assert "U2" in capsys.readouterr().out


def test_malformed_algebra_exits_with_parse_error(tmp_path, capsys) -> None:
    broken = tmp_path / "broken.json"
    broken.write_text('{\n  "p": 2,\n  "vertices": ["1"\n}', encoding="utf-8")
    assert main(["tau-h", "--algebra", str(broken), "--object", "0->S"]) == EXIT_CODES["parse_error"]
    assert "line: 4" in capsys.readouterr().err


def test_missing_object_exits_with_parse_error(capsys) -> None:
    assert main(["tau-h", "--algebra", "k_x2"]) == EXIT_CODES["parse_error"]
    assert "--object" in capsys.readouterr().err


def test_unknown_section_is_rejected(capsys) -> None:
    assert main(["check-paper", "--algebra", "k_x2", "--sections", "tau,bogus"]) == EXIT_CODES["parse_error"]


def test_orbit_families_need_self_injective_algebra(capsys) -> None:
    assert main(["periodicity", "--algebra", "kA2"]) == EXIT_CODES["hypothesis"]


def test_check_tau_section(capsys) -> None:
    assert main(["check-paper", "--algebra", "k_x2", "--sections", "tau"]) == EXIT_CODES["ok"]
    out = capsys.readouterr().out
    assert "[PASS] tau/tau_H_triple_agreement" in out
    assert "note: sections: tau" in out


def test_structured_report_is_reproducible(capsys) -> None:
    argv = ["periodicity", "--algebra", "k_x2", "--object", "P->S", "--format", "structured", "--seed", "7"]
    assert main(argv) == 0
    first = capsys.readouterr().out
    assert main(argv) == 0
    second = capsys.readouterr().out
    assert first == second
    report = json.loads(first)
    assert report["schema"] == REPORT_SCHEMA
    assert report["seed"] == 7
    assert report["notes"] == ["period 2 differs from 4"]


def test_report_written_to_output(tmp_path, capsys) -> None:
    target = tmp_path / "out" / "stable.json"
    dot = tmp_path / "stable.dot"
    argv = ["stable-quiver", "--algebra", "k_x2", "--format", "structured"]
    argv += ["--output", str(target), "--dot", str(dot)]
    assert main(argv) == 0
    saved = json.loads(target.read_text(encoding="utf-8"))
    assert saved["command"] == "stable-quiver"
    assert saved["status"] == "success"
    assert dot.read_text(encoding="utf-8").startswith("digraph")


def test_parser_splits_sections() -> None:
    config = to_config(build_parser().parse_args(["check-paper", "--algebra", "k_x2", "--sections", "tau, quiver"]))
    assert config["sections"] == ["tau", "quiver"]
    with pytest.raises(SystemExit):
        build_parser().parse_args(["knit", "--algebra", "k_x2", "--max-dim", "0"])


def test_render_text() -> None:
    report = {
        "command": "ass",
        "algebra": "kA2",
        "status": "failed",
        "rows": [
            {"section": "ass", "check": "is_almost_split_H", "passed": False, "detail": "no", "witness": "(0 -> S)"},
        ],
        "notes": ["P42 not applicable"],
    }
    assert render_text(report) == (
        "ass on kA2: failed\n"
        "[FAIL] ass/is_almost_split_H: no (witness: (0 -> S))\n"
        "note: P42 not applicable\n"
    )


def test_service_requires_object() -> None:
    with pytest.raises(ParseError):
        tau_h_service.run({"subcommand": "tau-h", "algebra": "k_x2", "format": "text", "seed": 0})


def test_backend_writes_sorted_json(backend, tmp_path) -> None:
    path = backend.save_report("demo", {"status": "success", "command": "knit"}, str(tmp_path / "demo.json"))
    assert open(path, encoding="utf-8").read() == '{\n  "command": "knit",\n  "status": "success"\n}\n'
    assert "k_x2" in backend.list_algebras()


def test_catalog_summary_line(backend) -> None:
    assert summarize(backend, "k_x2", with_h=False) == "k_x2: F2[x]/(x^2), 2 ind modules"


def test_seed_option_leaves_settings_alone(capsys) -> None:
    before = settings.SEED
    argv = ["tau-h", "--algebra", "k_x2", "--object", "0->S", "--format", "structured", "--seed", str(before + 7)]
    assert main(argv) == 0
    assert json.loads(capsys.readouterr().out)["seed"] == before + 7
    assert settings.SEED == before


def test_foundation_rows_take_the_run_seed(k_x2_modules, k_x2_h) -> None:
    first = foundation_rows(k_x2_modules, k_x2_h, seed=7)
    assert first == foundation_rows(k_x2_modules, k_x2_h, seed=7)
    assert all(row["passed"] for row in first)


def test_tau_agreement_on_cyclic_nakayama(nakayama_h) -> None:
    rows = tau_rows(nakayama_h)
    assert [row["check"] for row in rows] == ["tau_H_triple_agreement"]
    assert rows[0]["passed"], rows[0]["witness"]


@pytest.mark.slow
def test_tau_agreement_on_cubic_truncation(k_x3_h) -> None:
    rows = tau_rows(k_x3_h)
    assert rows[0]["passed"], rows[0]["witness"]
