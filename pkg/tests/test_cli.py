"""End-to-end runs of ``hyperchroma`` through :func:`main`."""
import json

import pytest

from app.cli.main import main
from app.db import load_cache, resolve_cache_url
from app.harness import EXIT_DATA, EXIT_INCONCLUSIVE, EXIT_NO_INPUT, EXIT_OK, EXIT_USAGE, EXIT_VIOLATED


def _run_json(tmp_path, *argv, name="out.json"):
    out = tmp_path / name
    code = main([*argv, "--format", "json", "--output", str(out)])
    return code, json.loads(out.read_text())


def test_chromatic(tmp_path):
    code, document = _run_json(tmp_path, "chromatic", "--gen", "cycle:2:4", "--k", "3")
    assert code == EXIT_OK
    assert document["command"] == "chromatic"
    assert document["result"]["coefficients"] == [0, -3, 6, -4, 1]
    assert document["result"]["values"] == {"3": 18}


def test_chromatic_subset_method(tmp_path):
    _, dc = _run_json(tmp_path, "chromatic", "--gen", "cycle:3:4", name="a.json")
    _, subset = _run_json(tmp_path, "chromatic", "--gen", "cycle:3:4", "--method", "subset", name="b.json")
    assert dc["result"]["coefficients"] == subset["result"]["coefficients"]


def test_girth_and_census(tmp_path):
    _, girth = _run_json(tmp_path, "girth", "--gen", "theta:2:3:3", name="g.json")
    assert girth["result"]["girth"] == 4
    _, census = _run_json(tmp_path, "census", "--gen", "cycle:2:4", name="c.json")
    assert (census["result"]["girth"], census["result"]["count"]) == (4, 1)


def test_dp_exact_witness_reproduces_count(tmp_path):
    witness = tmp_path / "witness.json"
    code, exact = _run_json(
        tmp_path, "dp-exact", "--gen", "cycle:2:4", "--k", "3", "--emit-witness", str(witness), name="e.json"
    )
    assert code == EXIT_OK
    assert exact["result"]["value"] == 15
    assert exact["result"]["exact"] is True
    for method in ("brute", "ie"):
        code, counted = _run_json(
            tmp_path, "dp-count", "--gen", "cycle:2:4", "--cover", str(witness), "--method", method,
            name=f"{method}.json",
        )
        assert code == EXIT_OK
        assert counted["result"]["count"] == 15
        assert counted["result"]["P"] == 18


def test_dp_exact_out_of_budget_is_inconclusive(tmp_path):
    code, result = _run_json(
        tmp_path, "dp-exact", "--gen", "cycle:2:4", "--k", "3", "--no-gauge", "--cover-budget", "5"
    )
    assert code == EXIT_INCONCLUSIVE
    assert result["result"]["exact"] is False


def test_dp_bounds(tmp_path):
    code, result = _run_json(tmp_path, "dp-bounds", "--gen", "cycle:2:4", "--k", "3")
    assert code == EXIT_OK
    assert result["result"]["cwd"] == 16
    assert result["result"]["cwd1"]["0"]["value"] == 15
    assert result["result"]["upper"]["bound"] == 15


def test_verify_claims(tmp_path):
    code, document = _run_json(tmp_path, "verify", "gir1", "--gen", "cycle:3:4")
    assert code == EXIT_OK
    (report,) = document["reports"]
    assert report["status"] == "verified"
    assert report["payload"]["atN"] == {"k": 2, "P": 82, "bound": 81}


def test_verify_with_injected_fault(tmp_path):
    code, document = _run_json(tmp_path, "verify", "gir1", "--gen", "cycle:3:4", "--inject-fault", "cwd-exponent")
    assert code == EXIT_VIOLATED
    assert document["reports"][0]["status"] == "violated"


def test_verify_level_needs_cover():
    assert main(["verify", "level", "--file", "data/table1.hg"]) == EXIT_USAGE


def test_verify_level_with_shipped_cover(tmp_path):
    code, document = _run_json(
        tmp_path, "verify", "level", "--file", "data/table1.hg", "--cover", "data/table1_cover.json"
    )
    assert code == EXIT_OK
    assert document["reports"][0]["payload"]["levelPattern"] == [False, True, False]


def test_json_output_is_deterministic(tmp_path):
    argv = ["verify", "evencyc", "--gen", "cycle:2:4", "--format", "json", "--output"]
    main([*argv, str(tmp_path / "one.json")])
    main([*argv, str(tmp_path / "two.json")])
    assert (tmp_path / "one.json").read_bytes() == (tmp_path / "two.json").read_bytes()


def test_csv_and_markdown_outputs(tmp_path):
    csv_path = tmp_path / "r.csv"
    main(["verify", "join", "--gen", "cycle:2:4", "--k-range", "2", "4", "--format", "csv", "--output", str(csv_path)])
    lines = csv_path.read_text().splitlines()
    assert lines[0] == "instance,claim,k,status,notes"
    assert len(lines) == 4
    assert lines[1].startswith("cycle:2:4#p1,join-identity,2,verified")
    md_path = tmp_path / "r.md"
    main(["chromatic", "--gen", "cycle:2:3", "--output", str(md_path)])
    assert md_path.read_text().startswith("## chromatic")


def test_gen_writes_text_format(tmp_path):
    out = tmp_path / "c.hg"
    assert main(["gen", "--gen", "cycle:3:3", "--output", str(out)]) == EXIT_OK
    code = main(["chromatic", "--file", str(out), "--format", "json", "--output", str(tmp_path / "p.json")])
    assert code == EXIT_OK


def test_exit_codes(tmp_path):
    assert main(["chromatic", "--file", str(tmp_path / "missing.hg")]) == EXIT_NO_INPUT
    assert main(["chromatic"]) == EXIT_USAGE
    assert main(["dp-exact", "--gen", "cycle:2:4"]) == EXIT_USAGE
    bad = tmp_path / "bad.hg"
    bad.write_text("vertices: 1 2\nedge: 1 3\n")
    assert main(["chromatic", "--file", str(bad)]) == EXIT_DATA
    assert main(["chromatic", "--gen", "wheel:5"]) == EXIT_DATA
    with pytest.raises(SystemExit) as caught:
        main(["no-such-command"])
    assert caught.value.code == EXIT_USAGE


def test_cache_round_trip(tmp_path):
    cache = tmp_path / "cache.db"
    argv = ["chromatic", "--gen", "cycle:3:4", "--cache", str(cache), "--format", "json"]
    assert main([*argv, "--output", str(tmp_path / "first.json")]) == EXIT_OK
    stored = load_cache(resolve_cache_url(str(cache)))
    assert stored
    assert main([*argv, "--output", str(tmp_path / "second.json")]) == EXIT_OK
    assert (tmp_path / "first.json").read_text() == (tmp_path / "second.json").read_text()
    assert len(load_cache(resolve_cache_url(str(cache)))) == len(stored)
