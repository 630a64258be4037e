"""Campaign config round-trips, determinism, accounting, and sharpness rows."""

import json
from fractions import Fraction

import pytest

from factorbench.campaign import CampaignConfig, Cell, run_campaign


def small_config(**overrides):
    base = dict(
        theorems=("A", "B", "D1"),
        n_min=6,
        n_max=7,
        p_list=(Fraction(3, 5), Fraction(4, 5)),
        seed_list=tuple(range(1, 9)),
        quota=3,
        a_ab=((1, 2),),
        a_n=(1,),
        b_m=(2, 3),
        b_n=(1,),
        d1_ab=((2, 3),),
        d1_n=(1,),
        d1_k=(2, "b"),
    )
    base.update(overrides)
    return CampaignConfig(**base)


def test_config_round_trips_through_text():
    config = small_config(extremal=((1, 2, 3, 1),), output_json="out.json")
    assert CampaignConfig.from_text(config.to_text()) == config


def test_config_file_round_trip(tmp_path):
    config = small_config()
    path = tmp_path / "campaign.cfg"
    config.to_file(path)
    assert CampaignConfig.from_file(path) == config


def test_config_unknown_field_is_named():
    with pytest.raises(ValueError, match="wibble"):
        CampaignConfig.from_text("wibble = 3\n")


def test_config_bad_value_names_field():
    with pytest.raises(ValueError, match="A.ab"):
        CampaignConfig.from_text("A.ab = 2:x\n")
    with pytest.raises(ValueError, match="quota"):
        small_config(quota=0).validate()
    with pytest.raises(ValueError, match="a < b"):
        small_config(a_ab=((3, 2),)).validate()
    with pytest.raises(ValueError, match="theorem"):
        small_config(theorems=("A", "Z")).validate()


def test_config_comments_and_blanks_are_ignored():
    text = "# comment\n\nquota = 7\n"
    assert CampaignConfig.from_text(text).quota == 7


def test_cells_drop_out_of_range_star_cells():
    config = small_config(b_m=(2, 3, 4), b_n=(1, 2))
    cells = [c for c in config.cells() if c.theorem == "B"]
    assert {(c.params["m"], c.params["n"]) for c in cells} == {
        (2, 1), (3, 1), (4, 1), (4, 2),
    }


def test_cells_resolve_symbolic_k():
    config = small_config()
    kinds = {(c.params["k"]) for c in config.cells() if c.theorem == "D1"}
    assert kinds == {2, 3}


def test_campaign_runs_clean_and_accounts():
    report = run_campaign(small_config())
    agg = report.aggregates
    assert agg["counterexample"] == 0
    assert agg["total"] == len(report.instances)
    assert (
        agg["verified"] + agg["vacuous"] + agg["counterexample"] + agg["capped"]
        == agg["total"]
    )
    # every kept instance satisfied its premises at sampling time
    for row in report.instances:
        assert row["outcome"] == "verified"
    for cell in report.cells:
        assert cell["kept"] <= small_config().quota
        assert cell["draws"] == cell["rejected_premise"] + cell["kept"] or (
            cell["kept"] == small_config().quota
        )


def test_campaign_is_deterministic_modulo_timestamp():
    a = run_campaign(small_config()).to_json_dict()
    b = run_campaign(small_config()).to_json_dict()
    a["header"].pop("timestamp")
    b["header"].pop("timestamp")
    assert json.dumps(a, sort_keys=True) == json.dumps(b, sort_keys=True)


def test_campaign_parallel_matches_serial():
    serial = run_campaign(small_config()).to_json_dict()
    parallel = run_campaign(small_config(), workers=2).to_json_dict()
    for d in (serial, parallel):
        d["header"].pop("timestamp")
        d["header"].pop("workers")
    assert json.dumps(serial, sort_keys=True) == json.dumps(parallel, sort_keys=True)


def test_campaign_extremal_rows_are_expected_failures():
    report = run_campaign(small_config(extremal=((1, 2, 3, 1),)))
    rows = [r for r in report.instances if r["expected_failure"]]
    assert len(rows) == 1
    row = rows[0]
    assert row["outcome"] == "vacuous"  # premises fail by construction
    assert row["conclusion"] is False
    assert row["sharpness"]["strictly_below"] is True
    assert row["sharpness"]["witness_ratio"] == "9/4"
    assert report.counterexamples == []  # not counted as counterexamples


def test_campaign_writes_outputs(tmp_path):
    config = small_config(
        output_json=str(tmp_path / "report.json"),
        output_csv=str(tmp_path / "report.csv"),
    )
    run_campaign(config)
    data = json.loads((tmp_path / "report.json").read_text())
    assert data["aggregates"]["counterexample"] == 0
    csv_text = (tmp_path / "report.csv").read_text()
    assert csv_text.splitlines()[0].startswith("cell,draws,")
    assert len(csv_text.splitlines()) == 1 + len(data["cells"])


def test_campaign_report_certificates_re_verify():
    from factorbench import parse_graph6
    from factorbench.factors import delta, low_set
    from factorbench.graphs import delete_vertices

    report = run_campaign(small_config(extremal=((1, 2, 3, 1), (2, 2, 3, 1))))
    for row in report.instances:
        if "counterexample" not in row:
            continue
        cert = row["counterexample"]["certificate"]
        g = parse_graph6(row["graph6"])
        deletion = row["counterexample"]["deletion"]
        assert deletion["kind"] == "vertices"
        res = delete_vertices(g, deletion["members"])
        index = {old: new for new, old in enumerate(res.original_labels)}
        s_local = [index[v] for v in cert["S"]]
        a, b = row["params"]["a"], row["params"]["b"]
        assert delta(res.graph, s_local, a, b) == cert["delta"] < 0
        assert sorted(res.original_labels[x] for x in
                      low_set(res.graph, s_local, a)) == cert["T"]


def test_cell_labels_are_stable():
    assert Cell("A", {"a": 1, "b": 2, "n": 1}).label() == "A(a=1,b=2,n=1)"
