"""Residue sweeps over a modulus and empirical audits of the equation's
exclusion rules, all driven by the complete decision procedure.

The audits deliberately report rather than assert for m != 4: the literal
"n1 must be a multiple of 4k - 1" and "primes of the form 4K + 1 are
excluded" readings are specializations of condition i) to m = 4, and for
other m the sweeps do find verified solutions with modulus = 1 (mod 4)
(e.g. m = 5, n0 = 23, n1 = 29).  A discrepancy is only ever recorded
together with a parameter set and triple that pass exact verification.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from .intmath import gcd, primes_up_to
from .theorem import (
    DecisionOutcome,
    ResidueClass,
    canonicalize,
    decide,
    enumerate_kl,
)


@dataclass(frozen=True)
class ScanRow:
    n0: int
    outcome: DecisionOutcome


@dataclass(frozen=True)
class ScanReport:
    m: int
    n1: int
    rows: tuple[ScanRow, ...]

    @property
    def admissible(self) -> tuple[int, ...]:
        """Residues with at least one verified solution, ascending."""
        return tuple(r.n0 for r in self.rows if r.outcome.is_solvable())

    @property
    def summary(self) -> dict[str, int]:
        solvable = len(self.admissible)
        return {"solvable": solvable, "unsolvable": len(self.rows) - solvable}


def scan_residues(m: int, n1: int, residues: list[int] | None = None,
                  jobs: int = 1) -> ScanReport:
    """Run ``decide`` for every residue n0 coprime to n1 (or a given subset).

    Rows are ordered by n0 regardless of ``jobs``, so output is
    deterministic under any parallelism degree.
    """
    if m < 4:
        raise ValueError(f"m must be >= 4, got {m}")
    if n1 < 2:
        raise ValueError(f"n1 must be >= 2, got {n1}")
    g = gcd(m, n1)
    if g != 1:
        raise ValueError(f"gcd(m, n1) must be 1, got gcd({m}, {n1}) = {g}")
    if residues is None:
        residues = [n0 for n0 in range(1, n1) if gcd(n0, n1) == 1]
    else:
        for n0 in residues:
            if not 1 <= n0 < n1:
                raise ValueError(f"residue {n0} outside [1, {n1})")
            if gcd(n0, n1) != 1:
                raise ValueError(f"residue {n0} not coprime to n1 = {n1}")
        residues = sorted(set(residues))

    def run(n0: int) -> ScanRow:
        return ScanRow(n0=n0, outcome=decide(ResidueClass(m, n0, n1)))

    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            rows = list(pool.map(run, residues))
    else:
        rows = [run(n0) for n0 in residues]
    rows.sort(key=lambda r: r.n0)
    return ScanReport(m=m, n1=n1, rows=tuple(rows))


@dataclass(frozen=True)
class AuditInstance:
    prime: int
    verdict: str  # "consistent" | "discrepancy"
    detail: str
    kl_pairs: tuple[tuple[int, int], ...] = ()
    witnesses: tuple[DecisionOutcome, ...] = ()


@dataclass(frozen=True)
class AuditReport:
    audit: str
    m: int
    bound: int
    instances: tuple[AuditInstance, ...] = field(default=())

    @property
    def has_discrepancy(self) -> bool:
        return any(i.verdict == "discrepancy" for i in self.instances)

    @property
    def discrepancies(self) -> tuple[AuditInstance, ...]:
        return tuple(i for i in self.instances if i.verdict == "discrepancy")


def _first_solvable(m: int, p: int) -> DecisionOutcome | None:
    for n0 in range(1, p):
        outcome = decide(ResidueClass(m, n0, p), collect_evidence=False)
        if outcome.is_solvable():
            return outcome
    return None


def audit_condition_i(m: int, bound: int) -> AuditReport:
    """Check prime moduli against the "modulus must be l*(m*k - 1)" rule.

    For each prime p <= bound coprime to m: record whether condition i)
    admits any (k, l), and cross-check by scanning residues for a solvable
    one.  A solvable residue where the m = 4 reading (p of the form 4k - 1)
    forbids one is reported as a discrepancy with its verified witness;
    for m = 4 that can never happen and the audit asserts it.
    """
    if bound < 2:
        raise ValueError(f"bound must be >= 2, got {bound}")
    instances = []
    for p in primes_up_to(bound):
        if gcd(p, m) != 1:
            continue
        kl = enumerate_kl(m, p)
        solvable = _first_solvable(m, p)
        if m == 4 and p % 4 == 1 and (kl or solvable):
            raise AssertionError(f"m = 4, p = {p} = 1 (mod 4) admitted (k, l) = {kl}")
        form_4k_minus_1 = p % 4 == 3
        if solvable and not form_4k_minus_1:
            verdict = "discrepancy"
            detail = (f"p = {p} is not of the form 4k - 1 yet n0 = {solvable.rc.n0} "
                      f"is solvable with (k, l) = {kl}")
        else:
            verdict = "consistent"
            if not kl:
                detail = f"p = {p}: condition i admits no (k, l); all residues unsolvable"
            elif solvable:
                detail = (f"p = {p} = 4*{(p + 1) // 4} - 1: solvable residue "
                          f"n0 = {solvable.rc.n0} found")
            else:
                detail = f"p = {p}: condition i admits {kl} but no residue is solvable"
        instances.append(AuditInstance(
            prime=p, verdict=verdict, detail=detail, kl_pairs=tuple(kl),
            witnesses=(solvable,) if solvable else (),
        ))
    return AuditReport(audit="condition-i", m=m, bound=bound, instances=tuple(instances))


def audit_corollary3(m: int, bound: int) -> AuditReport:
    """Probe the "no prime modulus = 1 (mod 4)" exclusion over all residues.

    Scans every residue of every prime p = 1 (mod 4) with p <= bound and
    gcd(p, m) = 1.  Any solvable residue is a discrepancy and ships with
    its verified solutions; for m = 4 the exclusion follows from condition
    i) and every instance comes out consistent.
    """
    if bound < 5:
        raise ValueError(f"bound must be >= 5, got {bound}")
    instances = []
    for p in primes_up_to(bound):
        if p % 4 != 1 or gcd(p, m) != 1:
            continue
        kl = enumerate_kl(m, p)
        witnesses = []
        if kl:
            report = scan_residues(m, p)
            witnesses = [row.outcome for row in report.rows if row.outcome.is_solvable()]
        if witnesses:
            residues = [w.rc.n0 for w in witnesses]
            instances.append(AuditInstance(
                prime=p, verdict="discrepancy",
                detail=f"p = {p} = 1 (mod 4) has solvable residues {residues}",
                kl_pairs=tuple(kl), witnesses=tuple(witnesses),
            ))
        else:
            instances.append(AuditInstance(
                prime=p, verdict="consistent",
                detail=f"p = {p}: no residue admits an integer polynomial solution",
                kl_pairs=tuple(kl),
            ))
    return AuditReport(audit="corollary-3", m=m, bound=bound, instances=tuple(instances))


def audit_corollary4(m: int, bound: int) -> AuditReport:
    """Check that n = 1 (mod p) is unsolvable for every prime p coprime to m.

    Runs ``decide`` on both representatives (m, 1, p) and the canonicalized
    (m, p + 1, p); a solvable outcome would be a discrepancy carrying its
    verified witness.
    """
    if bound < 2:
        raise ValueError(f"bound must be >= 2, got {bound}")
    instances = []
    for p in primes_up_to(bound):
        if gcd(p, m) != 1:
            continue
        direct = decide(ResidueClass(m, 1, p))
        shifted = decide(canonicalize(m, p + 1, p))
        solvable = [o for o in (direct, shifted) if o.is_solvable()]
        if solvable:
            instances.append(AuditInstance(
                prime=p, verdict="discrepancy",
                detail=f"p = {p}: n = 1 (mod {p}) unexpectedly solvable",
                witnesses=tuple(solvable),
            ))
        else:
            instances.append(AuditInstance(
                prime=p, verdict="consistent",
                detail=f"p = {p}: n = 1 (mod {p}) unsolvable",
            ))
    return AuditReport(audit="corollary-4", m=m, bound=bound, instances=tuple(instances))
