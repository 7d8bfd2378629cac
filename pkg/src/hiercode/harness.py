"""Predicted minimality for the poset codes, checked against the deciders.

Case labels:

========  ==========================  ==================================
label     parameters                  C(D0) / C(D) minimal?
========  ==========================  ==================================
T32.1     m > 2, l >= 2               D0: yes
T32.2     m = 2, l >= 2               D0: no
T32.3     m >= 2, l = 1               D0: no
T32.4     m = 1                       D0: yes
T33.1     m > 2, l >= 2               D: yes
T33.2     m = 2, l >= 2               D: yes iff every |B_i| < l
T33.3     m >= 2, l = 1               D: no
T33.4i    m = 1, some |B_i| = l       D: yes
T33.4ii   m = 1, max |B_i| = l - 1    D: no
T33.4iii  m = 1, max |B_i| < l - 1    D: yes
========  ==========================  ==================================
"""

from __future__ import annotations

import csv
import io
import itertools
import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Iterable, Iterator, Sequence

from hiercode.code import BudgetExceeded, DefiningSet, codeword
from hiercode.gf2 import BitVec
from hiercode.minimality import Method, Result, code_is_minimal, h_set, validate_witness
from hiercode.poset import HierarchicalPoset, IdealFamily, d0_bits, defining_sets

CASES = ("T32.1", "T32.2", "T32.3", "T32.4",
         "T33.1", "T33.2", "T33.3", "T33.4i", "T33.4ii", "T33.4iii")

KINDS = ("D", "D0")

ROW_FIELDS = ("m", "l", "ideals", "kind", "case", "condition", "predicted",
              "verdicts", "witness_u", "witness_v", "micros")


class HarnessError(AssertionError):
    """The construction contradicts a set-level identity it must satisfy."""


@dataclass(frozen=True)
class Prediction:
    case: str
    minimal: bool
    condition: str = ""


def predict_d0(m: int, l: int) -> Prediction:  # noqa: E741
    if m < 1 or l < 1:
        raise ValueError(f"need m, l >= 1, got ({m}, {l})")
    if m == 1:
        return Prediction("T32.4", True)
    if l == 1:
        return Prediction("T32.3", False)
    if m == 2:
        return Prediction("T32.2", False)
    return Prediction("T32.1", True)


def predict_d(m: int, l: int, b_sets: Sequence[BitVec]) -> Prediction:  # noqa: E741
    if m < 1 or l < 1:
        raise ValueError(f"need m, l >= 1, got ({m}, {l})")
    if not b_sets or any(b.is_zero() or b.width != l for b in b_sets):
        raise ValueError("need at least one nonempty B_i of width l")
    top = max(b.weight for b in b_sets)
    if m == 1:
        if top == l:
            return Prediction("T33.4i", True, f"max|B_i|={top} = l={l}")
        if top == l - 1:
            return Prediction("T33.4ii", False, f"max|B_i|={top} = l-1={l - 1}")
        return Prediction("T33.4iii", True, f"max|B_i|={top} < l-1={l - 1}")
    if l == 1:
        return Prediction("T33.3", False)
    if m == 2:
        if top < l:
            return Prediction("T33.2", True, f"max|B_i|={top} < l={l}")
        return Prediction("T33.2", False, f"max|B_i|={top} = l={l}")
    return Prediction("T33.1", True)


def _permute(mask: int, perm: Sequence[int]) -> int:
    out = 0
    for i, p in enumerate(perm):
        if mask >> i & 1:
            out |= 1 << p
    return out


def canonical_form(b_masks: Iterable[int], l: int) -> tuple[int, ...]:  # noqa: E741
    """Lexicographically least sorted image of the family under S_l."""
    masks = sorted(set(b_masks))
    best = tuple(masks)
    for perm in itertools.permutations(range(l)):
        image = tuple(sorted(_permute(b, perm) for b in masks))
        if image < best:
            best = image
    return best


def canonical_families(l: int, t_max: int, t_min: int = 1) -> Iterator[tuple[int, ...]]:  # noqa: E741
    """One family of t_min..t_max distinct nonempty B sets per S_l orbit.

    Ordered by t, then lexicographically by the sorted masks.
    """
    nonempty = range(1, 1 << l)
    # image tables for every non-identity permutation of the upper level
    tables = [[_permute(b, p) for b in range(1 << l)]
              for p in itertools.permutations(range(l))][1:]
    for t in range(t_min, t_max + 1):
        for family in itertools.combinations(nonempty, t):
            if all(sorted([tab[b] for b in family]) >= list(family) for tab in tables):
                yield family


@dataclass
class InstanceRow:
    m: int
    l: int  # noqa: E741
    ideals: list[list[int]]
    kind: str
    case: str
    condition: str
    predicted: bool
    verdicts: dict[str, str]
    witness_u: str | None = None
    witness_v: str | None = None
    micros: int | None = None

    @property
    def mismatch(self) -> bool:
        for result in self.verdicts.values():
            if result in (Result.INCONCLUSIVE.value, "refused"):
                continue
            if (result == Result.MINIMAL.value) != self.predicted:
                return True
        if not self.predicted and self.witness_u is None:
            return True
        return False

    def as_dict(self) -> dict:
        d = asdict(self)
        return {k: d[k] for k in ROW_FIELDS}


def instance_defining_set(m: int, l: int, b_sets: Sequence[int],  # noqa: E741
                          kind: str) -> tuple[DefiningSet, HierarchicalPoset, IdealFamily | None]:
    poset = HierarchicalPoset(m, l)
    if kind == "D0":
        family = IdealFamily.create(poset, b_sets) if b_sets else None
        return DefiningSet(poset.n, tuple(d0_bits(poset))), poset, family
    if kind != "D":
        raise ValueError(f"unknown set kind {kind!r}")
    family = IdealFamily.create(poset, b_sets)
    bundle = defining_sets(family)
    return DefiningSet(poset.n, bundle.D), poset, family


def verify_instance(m: int, l: int, b_sets: Sequence[int], kind: str,  # noqa: E741
                    methods: Sequence[Method | str] = (Method.GEOMETRIC, Method.DEFINITIONAL),
                    max_k: int | None = None, timings: bool = False) -> InstanceRow:
    """Build the instance, run each decider and compare with the prediction.

    ``b_sets`` holds local B masks (width l); ignored for kind D0 except for
    labelling. Budget refusals are recorded as ``"refused"``.
    """
    start = time.perf_counter()
    D, poset, family = instance_defining_set(m, l, b_sets, kind)
    if kind == "D0":
        pred = predict_d0(m, l)
    else:
        pred = predict_d(m, l, family.b_sets)
        if pred.case in ("T33.3", "T33.4i") or (pred.case == "T33.2" and not pred.minimal):
            bundle = defining_sets(family)
            if bundle.D1 or bundle.D != bundle.D0:
                raise HarnessError(f"{pred.case}: expected D = D0 for {family.labels()}")

    verdicts: dict[str, str] = {}
    witness = None
    for method in methods:
        method = Method(method)
        try:
            v = code_is_minimal(D, method, max_k)
        except BudgetExceeded:
            verdicts[method.value] = "refused"
            continue
        verdicts[method.value] = v.result.value
        if v.witness is not None and witness is None:
            u, w = v.witness
            if not validate_witness(D, u, w):
                raise HarnessError(f"{method.value} produced an invalid witness {u}, {w}")
            witness = v.witness
    elapsed = int((time.perf_counter() - start) * 1e6)
    return InstanceRow(
        m=m, l=l,
        ideals=family.labels() if family is not None and kind == "D" else [],
        kind=kind, case=pred.case, condition=pred.condition, predicted=pred.minimal,
        verdicts=verdicts,
        witness_u=str(witness[0]) if witness else None,
        witness_v=str(witness[1]) if witness else None,
        micros=elapsed if timings else None,
    )


@dataclass
class SweepReport:
    instances: list[InstanceRow] = field(default_factory=list)

    @property
    def mismatches(self) -> list[InstanceRow]:
        return [row for row in self.instances if row.mismatch]

    def rows(self) -> list[dict]:
        return [row.as_dict() for row in self.instances]

    def to_json(self) -> str:
        return json.dumps(self.rows(), indent=1) + "\n"

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(ROW_FIELDS)
        for row in self.rows():
            writer.writerow([_csv_cell(row[k]) for k in ROW_FIELDS])
        return buf.getvalue()


def _csv_cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, (list, dict)):
        return json.dumps(value, separators=(",", ":"))
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def sweep_tasks(m_range: Iterable[int], l_range: Iterable[int], t_max: int,
                kinds: Sequence[str] = KINDS, max_n: int | None = None,
                t_min: int = 1) -> list[tuple]:
    """(m, l, b_sets, kind) in report order; D0 runs once per (m, l)."""
    tasks = []
    for m in m_range:
        for l in l_range:  # noqa: E741
            if max_n is not None and m + l > max_n:
                continue
            if "D0" in kinds:
                tasks.append((m, l, (), "D0"))
            if "D" in kinds:
                for fam in canonical_families(l, t_max, t_min):
                    tasks.append((m, l, fam, "D"))
    return tasks


def _run_task(args) -> InstanceRow:
    (m, l, fam, kind), methods, max_k, timings = args  # noqa: E741
    return verify_instance(m, l, fam, kind, methods, max_k, timings)


def sweep(m_range: Iterable[int], l_range: Iterable[int], t_max: int,
          kinds: Sequence[str] = KINDS,
          methods: Sequence[Method | str] = tuple(Method),
          max_n: int | None = None, max_k: int | None = None,
          timings: bool = False, workers: int = 1, t_min: int = 1) -> SweepReport:
    """Verify every canonical instance; row order never depends on ``workers``."""
    tasks = sweep_tasks(m_range, l_range, t_max, kinds, max_n, t_min)
    methods = tuple(Method(x) for x in methods)
    jobs = [(task, methods, max_k, timings) for task in tasks]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(workers) as pool:
            rows = list(pool.map(_run_task, jobs, chunksize=4))
    else:
        rows = [_run_task(job) for job in jobs]
    return SweepReport(rows)


@dataclass
class WitnessCheck:
    label: str
    m: int
    l: int  # noqa: E741
    ideals: list[list[int]]
    kind: str
    u: str
    v: str
    checks: dict[str, bool]

    @property
    def passed(self) -> bool:
        return all(self.checks.values())


def _check_pair(label: str, D: DefiningSet, poset: HierarchicalPoset, ideals, kind: str,
                u: BitVec, v: BitVec, extra: dict[str, bool] | None = None) -> WitnessCheck:
    hu = set(h_set(u, D))
    hv = set(h_set(v, D))
    cu, cv = codeword(u, D), codeword(v, D)
    checks = {
        "H(u) ⊆ H(v)": hu <= hv,
        "c(v) ⪯ c(u)": cv.value & ~cu.value == 0,
        "c(v) != 0": not cv.is_zero(),
        "c(v) != c(u)": cv.value != cu.value,
    }
    checks.update(extra or {})
    return WitnessCheck(label, poset.m, poset.l, ideals, kind, str(u), str(v), checks)


def reproduce_proof_witnesses() -> list[WitnessCheck]:
    """The explicit (u, v) pairs of the three non-minimality arguments."""
    out = []

    # D0, m = 2, l = 2: u = (1,1,0), v = (1,0,0)
    D, poset, _ = instance_defining_set(2, 2, (), "D0")
    u = BitVec.from_support([1, 2], 4)
    v = BitVec.from_support([1], 4)
    witness_elem = BitVec.from_support([2, 3], 4)  # (0,1,e_1) separates c(u), c(v)
    out.append(_check_pair("T32.2", D, poset, [], "D0", u, v, {
        "(0,1,e1) in D0": witness_elem.bits in D.columns,
    }))

    # D0, m = 2, l = 1: u = (0,1), v = (e_1 + e_2, 1)
    D, poset, _ = instance_defining_set(2, 1, (), "D0")
    u = BitVec.from_support([3], 3)
    v = BitVec.from_support([1, 2, 3], 3)
    out.append(_check_pair("T32.3", D, poset, [], "D0", u, v, {
        "H(u, D0) is empty": not h_set(u, D),
    }))

    # D, m = 1, l = 3, B = {2, 3}: u = (0, e_j0), v = (1, e_j0), {j0} = V \ B
    D, poset, family = instance_defining_set(1, 3, (0b011,), "D")
    b = family.b_sets[0]
    j0 = (~b.bits & poset.upper_mask).bit_length()
    u = BitVec(1, 0).concat(BitVec.unit(j0, 3))
    v = BitVec(1, 1).concat(BitVec.unit(j0, 3))
    out.append(_check_pair("T33.4ii", D, poset, family.labels(), "D", u, v, {
        "u = (0, 1 - B)": u.bits == poset.join(0, ~b.bits & poset.upper_mask),
        "(0, e_j0) in D": u.bits in D.columns,
        "(1, 1) in D": BitVec.ones(4).bits in D.columns,
    }))
    return out
