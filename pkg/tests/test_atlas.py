import json

import pytest

from domatlas.atlas import (
    AtlasConfig,
    AtlasEntry,
    build_atlas,
    emit_root_plot_data,
    render,
    render_csv,
    verify,
)
from domatlas.polynomial import DominationPolynomial


def entry_counts(entries):
    counts = {}
    for e in entries:
        counts[e.order] = counts.get(e.order, 0) + 1
    return counts


class TestAtlasConfig:
    def test_defaults(self):
        cfg = AtlasConfig()
        assert cfg.max_order == 6 and cfg.connected_only and cfg.fmt == "csv"

    def test_rejects_bad_order(self):
        with pytest.raises(ValueError):
            AtlasConfig(max_order=0)
        with pytest.raises(ValueError):
            AtlasConfig(max_order=8)

    def test_rejects_bad_format(self):
        with pytest.raises(ValueError):
            AtlasConfig(fmt="xml")

    def test_rejects_bad_jobs(self):
        with pytest.raises(ValueError):
            AtlasConfig(jobs=0)


class TestBuildAtlas:
    def test_order_three_connected(self):
        entries = build_atlas(AtlasConfig(max_order=3))
        assert [e.poly.to_text() for e in entries] == [
            "x",
            "x^2 + 2x",
            "x^3 + 3x^2 + x",
            "x^3 + 3x^2 + 3x",
        ]

    def test_order_two_including_disconnected(self):
        entries = build_atlas(AtlasConfig(max_order=2, connected_only=False))
        assert [e.poly.to_text() for e in entries] == ["x", "x^2", "x^2 + 2x"]

    def test_full_connected_counts(self):
        entries = build_atlas(AtlasConfig(max_order=6))
        assert len(entries) == 143
        assert entry_counts(entries) == {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112}

    def test_full_all_counts(self):
        entries = build_atlas(AtlasConfig(max_order=6, connected_only=False))
        assert len(entries) == 208
        assert entry_counts(entries) == {1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156}

    def test_indices_contiguous_within_order(self):
        entries = build_atlas(AtlasConfig(max_order=5))
        for order in range(1, 6):
            block = [e.index for e in entries if e.order == order]
            assert block == list(range(1, len(block) + 1))

    def test_parallel_build_is_identical(self):
        serial = build_atlas(AtlasConfig(max_order=4, connected_only=False, jobs=1))
        parallel = build_atlas(AtlasConfig(max_order=4, connected_only=False, jobs=2))
        assert render(serial, "csv") == render(parallel, "csv")

    def test_entries_have_no_errors(self):
        assert all(e.error is None for e in build_atlas(AtlasConfig(max_order=6)))


class TestRenderers:
    def test_csv_golden_order_two(self):
        entries = build_atlas(AtlasConfig(max_order=2))
        assert render_csv(entries) == (
            "order,index,graph6,edges,gamma,coeffs,roots\n"
            "1,1,@,0,1,0|1,0^1\n"
            "2,1,A_,1,1,0|2|1,0^1|-2.000000+0.000000i\n"
        )

    def test_csv_error_entry(self):
        poly = DominationPolynomial(2, (0, 2, 1))
        entry = AtlasEntry(2, 1, "A_", 1, poly, None, None, error="did not converge")
        line = render_csv([entry]).splitlines()[1]
        assert line.endswith("ERROR:did not converge")

    def test_json_round_trips(self):
        entries = build_atlas(AtlasConfig(max_order=3))
        rows = json.loads(render(entries, "json"))
        assert len(rows) == 4
        assert rows[3]["polynomial"] == {"n": 3, "gamma": 1, "coeffs": [0, 3, 3, 1]}
        assert rows[3]["roots"]["zero_multiplicity"] == 1

    def test_text_render(self):
        entries = build_atlas(AtlasConfig(max_order=2))
        text = render(entries, "text")
        assert "D = x^2 + 2x" in text
        assert "roots: 0 (x1), -2.000000" in text


class TestPlotData:
    def test_order_two_connected(self):
        entries = build_atlas(AtlasConfig(max_order=2))
        assert emit_root_plot_data(entries) == (
            "order,graph6,re,im\n"
            "1,@,0.000000,0.000000\n"
            "2,A_,0.000000,0.000000\n"
            "2,A_,-2.000000,0.000000\n"
        )

    def test_zero_roots_expanded_by_multiplicity(self):
        entries = build_atlas(AtlasConfig(max_order=4))
        c4 = next(e for e in entries if e.poly.coeffs == (0, 0, 6, 4, 1))
        rows = [
            line
            for line in emit_root_plot_data([c4]).splitlines()[1:]
        ]
        assert rows.count(f"4,{c4.graph6},0.000000,0.000000") == 2
        assert f"4,{c4.graph6},-2.000000,1.414214" in rows
        assert f"4,{c4.graph6},-2.000000,-1.414214" in rows

    def test_empty_entries_give_header_only(self):
        assert emit_root_plot_data([]) == "order,graph6,re,im\n"


class TestVerify:
    def test_default_run_passes(self):
        report = verify(AtlasConfig(max_order=5, connected_only=False), union_samples=20)
        assert report.all_passed
        assert all(not bad for _, _, bad in report.checks)

    def test_corrupted_coefficient_is_caught_and_named(self):
        def corrupt(g6, poly):
            if g6 == "Bw":
                return DominationPolynomial(3, (0, 2, 3, 1))
            return poly

        report = verify(AtlasConfig(max_order=3), corrupt=corrupt, union_samples=5)
        assert not report.all_passed
        failures = {name: bad for name, ok, bad in report.checks if not ok}
        assert failures == {"oracle-equivalence": ["Bw"]}

    def test_report_text(self):
        report = verify(AtlasConfig(max_order=3), union_samples=5)
        lines = report.to_text().splitlines()
        assert all(line.startswith("PASS") for line in lines)
