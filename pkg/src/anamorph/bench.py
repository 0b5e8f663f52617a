"""Benchmark harness: covert-recovery time versus message index.

Four scheme variants are timed on the same machine: exhaustive search and
BSGS, each over the multiplicative group mod p and over secp256k1. Each
cell plants a known covert value, times only Alice's decryption (table
construction included unless warm mode is requested), verifies the value
was actually recovered, and records wall time plus the instrumented group
operation count. Absolute times are hardware-bound; the interesting output
is the growth shape, linear for the vanilla schemes and square-root for
the BSGS ones.
"""

from __future__ import annotations

import io
import csv
import random
import statistics
import time
from dataclasses import dataclass

from . import modp, scheme
from .dlog import CountingGroup, EcGroup, build_baby_table
from .errors import BenchPlanError, ZeroNonceError

SCHEME_IDS = ("vanilla-dlp", "ecc-dlp-vanilla", "bsgs-dlp", "eccdlp-bsgs")
VANILLA_SCHEMES = ("vanilla-dlp", "ecc-dlp-vanilla")

#: Message-index series 9, 99, ..., 9_999_999_999.
DEFAULT_CM_SERIES = tuple(10**i - 1 for i in range(1, 11))
#: Exhaustive search beyond this takes minutes per repetition; plans must
#: opt in explicitly.
VANILLA_CM_CAP = 10**6

CSV_COLUMNS = ("scheme", "cm", "median_ms", "min_ms", "max_ms", "combine_ops")


@dataclass(frozen=True)
class BenchRecord:
    scheme: str
    cm: int
    rep: int
    elapsed_ms: float
    combine_ops: int
    mode: str = "cold"  # "warm" reuses a prebuilt baby table
    timed_out: bool = False


@dataclass(frozen=True)
class BenchPlan:
    schemes: tuple[str, ...] = SCHEME_IDS
    cm_values: tuple[int, ...] = DEFAULT_CM_SERIES
    repetitions: int = 5
    timeout_s: float = 120.0
    bsgs_mode: str = "cold"  # "cold" | "warm" | "both"
    modp_group: str = "modp-2048"
    allow_slow_vanilla: bool = False

    def __post_init__(self):
        object.__setattr__(self, "schemes", tuple(self.schemes))
        object.__setattr__(self, "cm_values", tuple(self.cm_values))
        unknown = [s for s in self.schemes if s not in SCHEME_IDS]
        if unknown or not self.schemes:
            raise BenchPlanError(f"unknown or empty scheme set: {unknown}")
        if not self.cm_values or list(self.cm_values) != sorted(self.cm_values):
            raise BenchPlanError("cm values must be non-empty and ascending")
        if any(cm < 1 for cm in self.cm_values):
            raise BenchPlanError("cm values must be positive")
        if self.repetitions < 1:
            raise BenchPlanError("repetitions must be at least 1")
        if self.timeout_s <= 0:
            raise BenchPlanError("timeout must be positive")
        if self.bsgs_mode not in ("cold", "warm", "both"):
            raise BenchPlanError(f"unknown bsgs mode {self.bsgs_mode!r}")
        if self.modp_group not in modp.MODP_GROUPS:
            raise BenchPlanError(f"unknown mod-p group {self.modp_group!r}")
        slow = [
            (s, cm)
            for s in self.schemes
            if s in VANILLA_SCHEMES
            for cm in self.cm_values
            if cm > VANILLA_CM_CAP
        ]
        if slow and not self.allow_slow_vanilla:
            raise BenchPlanError(
                f"exhaustive-search cells beyond cm={VANILLA_CM_CAP} are "
                f"infeasible by default ({slow[:3]}...); set allow_slow_vanilla "
                "or trim the cm series"
            )

    @classmethod
    def from_json(cls, doc: dict) -> "BenchPlan":
        if not isinstance(doc, dict):
            raise BenchPlanError("plan document must be a JSON object")
        known = {
            "schemes", "cm_values", "repetitions", "timeout_s",
            "bsgs_mode", "modp_group", "allow_slow_vanilla",
        }
        unknown = set(doc) - known
        if unknown:
            raise BenchPlanError(f"unknown plan fields: {sorted(unknown)}")
        try:
            return cls(**doc)
        except TypeError as exc:
            raise BenchPlanError(f"malformed plan: {exc}") from exc


def _time_cell(scheme_id: str, cm: int, mode: str, modp_params, rng):
    """Runs one repetition; returns (elapsed_ms, combine_ops)."""
    bound = cm
    if scheme_id in ("ecc-dlp-vanilla", "eccdlp-bsgs"):
        method = "brute" if scheme_id == "ecc-dlp-vanilla" else "bsgs"
        dictator = scheme.keygen_dictator(rng)
        alice = scheme.keygen_alice(rng)
        m0 = rng.randrange(0, 1 << 256)
        while True:
            try:
                ct = scheme.encrypt(
                    dictator.pk, m0, cm, alice.t, cm_bound=scheme.MAX_COVERT_BOUND
                )
                break
            except ZeroNonceError:  # pragma: no cover - 2^-226 per draw
                alice = scheme.keygen_alice(rng)
        base = EcGroup()
        counting = CountingGroup(base)
        table = build_baby_table(bound, base) if mode == "warm" else None
        start = time.perf_counter()
        got = scheme.decrypt_alice(
            alice, ct.c1, bound=bound, method=method, group=counting, table=table
        )
        elapsed = time.perf_counter() - start
    else:
        method = "brute" if scheme_id == "vanilla-dlp" else "bsgs"
        sk0, pk = modp.modp_keygen(modp_params, rng)
        t, _ = modp.modp_keygen(modp_params, rng)
        m0 = rng.randrange(0, 1 << 256)
        while True:
            try:
                ct = modp.modp_encrypt(
                    modp_params, pk, m0, cm, t, cm_bound=scheme.MAX_COVERT_BOUND
                )
                break
            except ZeroNonceError:  # pragma: no cover
                t, _ = modp.modp_keygen(modp_params, rng)
        base = modp.ModpGroup(modp_params)
        counting = CountingGroup(base)
        table = build_baby_table(bound, base) if mode == "warm" else None
        start = time.perf_counter()
        got = modp.modp_decrypt_alice(
            modp_params, t, ct.c1, bound=bound, method=method,
            group=counting, table=table,
        )
        elapsed = time.perf_counter() - start
    if got != cm:
        raise RuntimeError(
            f"benchmark recovered {got} instead of the planted {cm} "
            f"({scheme_id}); timings would be meaningless"
        )
    return elapsed * 1000.0, counting.ops


def run_bench(plan: BenchPlan, rng: random.Random | None = None) -> list[BenchRecord]:
    """Execute the plan cell by cell, strictly sequentially.

    Every repetition verifies the planted covert value was recovered.
    A repetition that overruns the per-cell timeout is recorded with
    ``timed_out=True`` and the cell's remaining repetitions are skipped.
    """
    rng = rng or random.Random()
    modp_params = modp.MODP_GROUPS[plan.modp_group]
    records: list[BenchRecord] = []
    for scheme_id in plan.schemes:
        if scheme_id in ("vanilla-dlp", "ecc-dlp-vanilla"):
            modes = ("cold",)  # no table to warm up
        elif plan.bsgs_mode == "both":
            modes = ("cold", "warm")
        else:
            modes = (plan.bsgs_mode,)
        for cm in plan.cm_values:
            for mode in modes:
                for rep in range(plan.repetitions):
                    elapsed_ms, ops = _time_cell(scheme_id, cm, mode, modp_params, rng)
                    timed_out = elapsed_ms > plan.timeout_s * 1000.0
                    records.append(
                        BenchRecord(
                            scheme=scheme_id, cm=cm, rep=rep,
                            elapsed_ms=elapsed_ms, combine_ops=ops,
                            mode=mode, timed_out=timed_out,
                        )
                    )
                    if timed_out:
                        break
    return records


def _row_label(record: BenchRecord) -> str:
    return record.scheme if record.mode == "cold" else f"{record.scheme}:warm"


def summarize(records: list[BenchRecord]) -> list[dict]:
    """Aggregate per (scheme, cm) cell: median/min/max ms and op count."""
    if not records:
        raise ValueError("no benchmark records to report")
    cells: dict[tuple[str, int], list[BenchRecord]] = {}
    for record in records:
        cells.setdefault((_row_label(record), record.cm), []).append(record)
    rows = []
    for (label, cm), recs in sorted(cells.items()):
        finished = [r for r in recs if not r.timed_out]
        if finished:
            times = [r.elapsed_ms for r in finished]
            row = {
                "scheme": label,
                "cm": cm,
                "median_ms": f"{statistics.median(times):.4f}",
                "min_ms": f"{min(times):.4f}",
                "max_ms": f"{max(times):.4f}",
                "combine_ops": str(max(r.combine_ops for r in finished)),
            }
        else:  # every repetition overran the budget: report that, not a number
            row = {
                "scheme": label, "cm": cm, "median_ms": "timeout",
                "min_ms": "timeout", "max_ms": "timeout",
                "combine_ops": str(max(r.combine_ops for r in recs)),
            }
        rows.append(row)
    return rows


def emit_report(records: list[BenchRecord], fmt: str = "csv") -> str:
    """Render the aggregated table as CSV or a markdown pipe table."""
    rows = summarize(records)
    if fmt == "csv":
        out = io.StringIO()
        writer = csv.DictWriter(out, fieldnames=CSV_COLUMNS, lineterminator="\n")
        writer.writeheader()
        writer.writerows(rows)
        return out.getvalue()
    if fmt == "markdown":
        lines = [
            "| " + " | ".join(CSV_COLUMNS) + " |",
            "|" + "|".join(" --- " for _ in CSV_COLUMNS) + "|",
        ]
        for row in rows:
            lines.append("| " + " | ".join(str(row[c]) for c in CSV_COLUMNS) + " |")
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown report format {fmt!r}")
