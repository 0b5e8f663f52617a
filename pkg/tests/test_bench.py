import csv
import io
import math
import random

import pytest

from anamorph.bench import (
    CSV_COLUMNS,
    DEFAULT_CM_SERIES,
    SCHEME_IDS,
    VANILLA_CM_CAP,
    BenchPlan,
    BenchRecord,
    emit_report,
    run_bench,
)
from anamorph.errors import BenchPlanError


class TestPlanValidation:
    def test_defaults_shape(self):
        plan = BenchPlan(schemes=("eccdlp-bsgs",))
        assert plan.cm_values == DEFAULT_CM_SERIES
        assert plan.repetitions == 5
        assert plan.timeout_s == 120.0

    def test_rejects_unknown_scheme(self):
        with pytest.raises(BenchPlanError):
            BenchPlan(schemes=("quantum-dlp",))

    def test_rejects_unsorted_or_empty_cm(self):
        with pytest.raises(BenchPlanError):
            BenchPlan(schemes=("eccdlp-bsgs",), cm_values=(99, 9))
        with pytest.raises(BenchPlanError):
            BenchPlan(schemes=("eccdlp-bsgs",), cm_values=())

    def test_rejects_zero_repetitions(self):
        with pytest.raises(BenchPlanError):
            BenchPlan(schemes=("eccdlp-bsgs",), cm_values=(9,), repetitions=0)

    def test_vanilla_beyond_cap_is_infeasible_without_override(self):
        with pytest.raises(BenchPlanError, match="infeasible"):
            BenchPlan(schemes=("ecc-dlp-vanilla",), cm_values=(VANILLA_CM_CAP * 10,))
        plan = BenchPlan(
            schemes=("ecc-dlp-vanilla",),
            cm_values=(VANILLA_CM_CAP * 10,),
            allow_slow_vanilla=True,
        )
        assert plan.allow_slow_vanilla

    def test_from_json_round_trip(self):
        doc = {"schemes": ["bsgs-dlp"], "cm_values": [9, 99], "repetitions": 2}
        plan = BenchPlan.from_json(doc)
        assert plan.schemes == ("bsgs-dlp",)
        assert plan.cm_values == (9, 99)

    def test_from_json_rejects_unknown_fields(self):
        with pytest.raises(BenchPlanError, match="unknown plan fields"):
            BenchPlan.from_json({"scheems": ["bsgs-dlp"]})
        with pytest.raises(BenchPlanError):
            BenchPlan.from_json("not a dict")


class TestRunBench:
    def test_single_cell_smoke(self):
        plan = BenchPlan(schemes=("eccdlp-bsgs",), cm_values=(9,), repetitions=1)
        records = run_bench(plan, random.Random(1))
        assert len(records) == 1
        rec = records[0]
        assert rec.scheme == "eccdlp-bsgs"
        assert rec.cm == 9
        assert rec.rep == 0
        assert rec.elapsed_ms >= 0
        assert rec.combine_ops > 0
        assert not rec.timed_out

    def test_all_four_schemes_produce_records(self):
        plan = BenchPlan(schemes=SCHEME_IDS, cm_values=(9,), repetitions=1,
                         modp_group="modp-2048")
        records = run_bench(plan, random.Random(2))
        assert {r.scheme for r in records} == set(SCHEME_IDS)

    def test_bsgs_ops_grow_as_square_root(self):
        plan = BenchPlan(
            schemes=("eccdlp-bsgs",), cm_values=(10**4, 10**8), repetitions=1
        )
        records = run_bench(plan, random.Random(3))
        by_cm = {r.cm: r.combine_ops for r in records}
        ratio = by_cm[10**8] / by_cm[10**4]
        expected = math.sqrt(10**8 / 10**4)
        assert expected / 2 <= ratio <= expected * 2

    def test_warm_mode_skips_table_build(self):
        cold = BenchPlan(schemes=("bsgs-dlp",), cm_values=(9999,), repetitions=1,
                         bsgs_mode="cold")
        warm = BenchPlan(schemes=("bsgs-dlp",), cm_values=(9999,), repetitions=1,
                         bsgs_mode="warm")
        both = BenchPlan(schemes=("bsgs-dlp",), cm_values=(9999,), repetitions=1,
                         bsgs_mode="both")
        rng = random.Random(4)
        cold_rec = run_bench(cold, rng)[0]
        warm_rec = run_bench(warm, rng)[0]
        assert warm_rec.mode == "warm"
        assert warm_rec.combine_ops < cold_rec.combine_ops
        modes = [r.mode for r in run_bench(both, rng)]
        assert modes == ["cold", "warm"]

    def test_vanilla_ops_are_linear_in_cm(self):
        plan = BenchPlan(schemes=("vanilla-dlp",), cm_values=(100, 1000),
                         repetitions=1)
        records = run_bench(plan, random.Random(5))
        by_cm = {r.cm: r.combine_ops for r in records}
        # One residual combine plus one step per candidate.
        assert by_cm[100] == 101
        assert by_cm[1000] == 1001

    def test_timeout_is_recorded_and_cuts_repetitions(self):
        plan = BenchPlan(schemes=("eccdlp-bsgs",), cm_values=(999,),
                         repetitions=5, timeout_s=1e-9)
        records = run_bench(plan, random.Random(6))
        assert len(records) == 1
        assert records[0].timed_out


class TestReport:
    def _records(self):
        plan = BenchPlan(schemes=("bsgs-dlp", "eccdlp-bsgs"), cm_values=(9, 99),
                         repetitions=3, modp_group="modp-2048")
        return run_bench(plan, random.Random(7))

    def test_one_record_one_row(self):
        records = [BenchRecord("eccdlp-bsgs", 9, 0, 1.25, 10)]
        report = emit_report(records)
        lines = report.strip().split("\n")
        assert lines[0] == ",".join(CSV_COLUMNS)
        assert len(lines) == 2
        assert lines[1].startswith("eccdlp-bsgs,9,1.2500,")

    def test_csv_round_trip(self):
        records = self._records()
        text = emit_report(records, fmt="csv")
        parsed = list(csv.DictReader(io.StringIO(text)))
        assert len(parsed) == 4  # 2 schemes x 2 cm values
        again = emit_report(records, fmt="csv")
        assert again == text
        # Rows are sorted by (scheme, cm) and medians are parseable numbers.
        keys = [(row["scheme"], int(row["cm"])) for row in parsed]
        assert keys == sorted(keys)
        for row in parsed:
            assert float(row["median_ms"]) >= 0
            assert float(row["min_ms"]) <= float(row["median_ms"]) <= float(row["max_ms"])

    def test_markdown_shape(self):
        text = emit_report(self._records(), fmt="markdown")
        lines = text.strip().split("\n")
        assert lines[0].startswith("| scheme |")
        assert set(lines[1].replace("|", "").split()) == {"---"}
        assert len(lines) == 2 + 4

    def test_timeout_rows_say_so(self):
        records = [BenchRecord("eccdlp-bsgs", 9, 0, 50.0, 10, timed_out=True)]
        report = emit_report(records)
        assert "timeout" in report

    def test_empty_input_rejected(self):
        with pytest.raises(ValueError):
            emit_report([])
        with pytest.raises(ValueError):
            emit_report([BenchRecord("eccdlp-bsgs", 9, 0, 1.0, 1)], fmt="pdf")

    def test_warm_rows_labelled(self):
        records = [
            BenchRecord("bsgs-dlp", 9, 0, 1.0, 10, mode="cold"),
            BenchRecord("bsgs-dlp", 9, 0, 0.5, 4, mode="warm"),
        ]
        report = emit_report(records)
        assert "bsgs-dlp:warm" in report
