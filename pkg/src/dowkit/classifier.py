"""Analysis of pairs of insertions that produce equivalent words.

The oracle side (pair_equivalent, enumerate_equivalent_pairs) decides
equivalence by brute force.  The structural side (check_structure,
predict_pairs) ties equivalent pairs to the shape of the host word: a pair
of same-kind insertions at interleaving, nested, or sequential positions is
equivalent only when the segments of w between the four insertion points
form a repeat word, an interleaving or nested family word, a return word,
or a tangled cord, and conversely each such shape yields a concrete
equivalent pair.  Mixed-kind nontrivial pairs are never equivalent.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .generators import gen_int, gen_nes, gen_tangled
from .insertions import (
    InsertionKind,
    InsertionSpec,
    PairPositionType,
    classify_positions,
    insert,
    inserted_sow,
)
from .patterns import is_palindrome
from .words import Word, format_word, is_ascending, is_dow, is_sow, normalize, reverse

FAMILY_REPEAT_WORD = "rep"
FAMILY_RETURN_WORD = "ret"
FAMILY_INT = "int"
FAMILY_NES = "nes"
FAMILY_TANGLED_RHO = "trho"
FAMILY_TANGLED_TAU = "ttau"


@dataclass(frozen=True)
class StructureWitness:
    """Segmentation evidence for an equivalent pair.

    segments holds z0..z4, the pieces of w cut at the four insertion
    positions; family names the structural class of the load-bearing
    segments and family_params its parameters ((h, nu) for int/nes,
    (nu, m, p) for cords, the block length for plain repeat/return words).
    """

    pair_type: PairPositionType
    kinds: tuple[InsertionKind, InsertionKind]
    segments: tuple[Word, Word, Word, Word, Word]
    family: str
    family_params: tuple[int, ...]


@dataclass(frozen=True)
class PairReport:
    spec1: InsertionSpec
    spec2: InsertionSpec
    equivalent: bool
    witness: StructureWitness | None


@dataclass
class SweepReport:
    """Outcome of one verification sweep: items checked and failure notes."""

    name: str
    checked: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def summary(self) -> str:
        verdict = "PASS" if self.ok else "FAIL"
        return f"{self.name}: checked={self.checked} failures={len(self.failures)} {verdict}"


def _require_canonical_dow(w: Word) -> None:
    if not is_dow(w) or not is_ascending(w):
        raise ValueError(f"expected a canonical DOW, got {format_word(w)!r}")


def _spec_order(spec: InsertionSpec):
    return (spec.k, spec.ell, spec.kind.value)


def pair_equivalent(w: Word, s1: InsertionSpec, s2: InsertionSpec) -> bool:
    """Whether the two insertions into w produce equivalent words."""
    return normalize(insert(w, s1)) == normalize(insert(w, s2))


def check_structure(
    w: Word, s1: InsertionSpec, s2: InsertionSpec
) -> StructureWitness | None:
    """Structural witness for a pair of distinct nontrivial insertions, or None.

    Cuts w at the four insertion positions into z0..z4 and tests the
    condition tied to the pair's position type and kind:

      interleaving repeat:  z1 == z3 (a repeat word around the gap)
      interleaving return:  z1 z3 equivalent to gen_int(|z1| / nu, nu)
      nested repeat:        z1 z3 equivalent to gen_nes(|z1| / nu, nu)
      nested return:        z3 == reversed(z1) (a return word around the gap)
      sequential repeat:    z1 z2 z3 equivalent to a repeat-flavor cord
      sequential return:    z1 z2 z3 equivalent to a return-flavor cord,
                            with nu dividing |z1|

    Mixed kinds never carry a witness.  This checks the necessary direction
    for a pair believed equivalent; it does not itself decide equivalence.
    """
    if s1.nu != s2.nu:
        raise ValueError("paired insertions must share nu")
    if s1.trivial or s2.trivial:
        raise ValueError("the structure table applies to nontrivial insertions")
    s1, s2 = sorted((s1, s2), key=_spec_order)
    if (s1.kind, s1.k, s1.ell) == (s2.kind, s2.k, s2.ell):
        raise ValueError("insertions are identical")
    if s1.kind is not s2.kind:
        return None
    _require_canonical_dow(w)
    if s2.ell > len(w) + 1:
        raise ValueError(f"spec {s2} out of range for word of length {len(w)}")
    ptype = classify_positions(s1, s2)
    cuts = sorted((s1.k, s1.ell, s2.k, s2.ell))
    z0 = w[: cuts[0] - 1]
    z1 = w[cuts[0] - 1 : cuts[1] - 1]
    z2 = w[cuts[1] - 1 : cuts[2] - 1]
    z3 = w[cuts[2] - 1 : cuts[3] - 1]
    z4 = w[cuts[3] - 1 :]
    nu = s1.nu
    kind = s1.kind
    family = None
    params: tuple[int, ...] = ()
    if ptype is PairPositionType.INTERLEAVING:
        if kind is InsertionKind.REPEAT:
            if z1 and z1 == z3 and is_sow(z1):
                family, params = FAMILY_REPEAT_WORD, (len(z1),)
        else:
            h, r = divmod(len(z1), nu)
            if r == 0 and h >= 1 and normalize(z1 + z3) == gen_int(h, nu):
                family, params = FAMILY_INT, (h, nu)
    elif ptype is PairPositionType.NESTED:
        if kind is InsertionKind.REPEAT:
            h, r = divmod(len(z1), nu)
            if r == 0 and h >= 1 and normalize(z1 + z3) == gen_nes(h, nu):
                family, params = FAMILY_NES, (h, nu)
        else:
            if z1 and z3 == reverse(z1) and is_sow(z1):
                family, params = FAMILY_RETURN_WORD, (len(z1),)
    else:
        q = len(z1)
        p, r = divmod(len(z2), 2 * nu)
        if len(z3) == q and r == 0 and p >= 1:
            if kind is InsertionKind.REPEAT:
                if normalize(z1 + z2 + z3) == gen_tangled(kind, nu, q, p):
                    family, params = FAMILY_TANGLED_RHO, (nu, q, p)
            elif q % nu == 0:
                if normalize(z1 + z2 + z3) == gen_tangled(kind, nu, q, p):
                    family, params = FAMILY_TANGLED_TAU, (nu, q, p)
    if family is None:
        return None
    return StructureWitness(ptype, (s1.kind, s2.kind), (z0, z1, z2, z3, z4), family, params)


def _all_specs(n: int, nu: int) -> list[InsertionSpec]:
    # trivial repeat and return insertions are the same insertion, so nu = 1
    # enumerates only the repeat form
    kinds = (
        (InsertionKind.REPEAT,)
        if nu == 1
        else (InsertionKind.REPEAT, InsertionKind.RETURN)
    )
    return [
        InsertionSpec(kind, nu, k, ell)
        for kind in kinds
        for k in range(1, n + 2)
        for ell in range(k, n + 2)
    ]


def enumerate_equivalent_pairs(
    w: Word, nu: int, include_trivial: bool = False
) -> list[PairReport]:
    """All unordered pairs of distinct insertions of length nu whose results
    on w are equivalent, each with its structural witness when nontrivial.

    Results are grouped by canonical outcome, so the cost is one insertion
    per spec plus pairing within groups.  Trivial pairs (nu = 1) appear only
    on request and never carry witnesses.
    """
    _require_canonical_dow(w)
    if nu < 1:
        raise ValueError("nu must be >= 1")
    if nu == 1 and not include_trivial:
        return []
    groups: dict[Word, list[InsertionSpec]] = {}
    for spec in _all_specs(len(w), nu):
        groups.setdefault(normalize(insert(w, spec)), []).append(spec)
    reports = []
    for specs in groups.values():
        specs.sort(key=_spec_order)
        for s1, s2 in combinations(specs, 2):
            witness = check_structure(w, s1, s2) if nu >= 2 else None
            reports.append(PairReport(s1, s2, True, witness))
    reports.sort(
        key=lambda r: (
            r.spec1.kind.value,
            r.spec1.k,
            r.spec1.ell,
            r.spec2.kind.value,
            r.spec2.k,
            r.spec2.ell,
        )
    )
    return reports


def predict_pairs(
    w: Word, nu: int
) -> list[tuple[InsertionSpec, InsertionSpec]]:
    """Pairs of distinct insertions guaranteed equivalent by the shape of w.

    Scans factors of w for the six structural templates (repeat word around
    a gap, interleaving family, nested family, return word around a gap, and
    the two cord flavors) and emits the canonical pair for each match.
    Every emitted pair is re-checked against the brute-force oracle; a
    failure there would be a bug, so it raises rather than filtering.
    """
    _require_canonical_dow(w)
    if nu < 1:
        raise ValueError("nu must be >= 1")
    n = len(w)
    found: set[tuple[InsertionSpec, InsertionSpec]] = set()

    def emit(kind: InsertionKind, k1: int, l1: int, k2: int, l2: int) -> None:
        if nu == 1:
            # trivial insertions: both kinds are the same map, spell as rho
            kind = InsertionKind.REPEAT
        pair = (InsertionSpec(kind, nu, k1, l1), InsertionSpec(kind, nu, k2, l2))
        if pair in found:
            return
        if not pair_equivalent(w, *pair):
            raise RuntimeError(
                f"predicted pair {pair[0]}, {pair[1]} failed verification "
                f"on {format_word(w)}"
            )
        found.add(pair)

    # interleaving and nested templates: equal-length blocks around a gap
    for a in range(1, n + 1):
        for length in range(1, (n - a + 1) // 2 + 1):
            z1 = w[a - 1 : a - 1 + length]
            if not is_sow(z1):
                break
            for gap in range(0, n - a + 2 - 2 * length):
                z3 = w[a - 1 + length + gap : a - 1 + 2 * length + gap]
                if not is_sow(z3):
                    continue
                if z3 == z1:
                    emit(InsertionKind.REPEAT, a, a + length + gap, a + length, a + 2 * length + gap)
                if z3 == reverse(z1):
                    emit(InsertionKind.RETURN, a, a + 2 * length + gap, a + length, a + length + gap)
                if length % nu == 0:
                    h = length // nu
                    cat = normalize(z1 + z3)
                    if cat == gen_int(h, nu):
                        emit(InsertionKind.RETURN, a, a + length + gap, a + length, a + 2 * length + gap)
                    if cat == gen_nes(h, nu):
                        emit(InsertionKind.REPEAT, a, a + 2 * length + gap, a + length, a + length + gap)
    # sequential templates: factors equivalent to a tangled cord
    for a in range(1, n + 1):
        for flen in range(2, n - a + 2):
            factor = w[a - 1 : a - 1 + flen]
            canon = None
            for m in range(flen // 2 + 1):
                rem = flen - 2 * m
                if rem <= 0:
                    break
                levels, r = divmod(rem, 2 * nu)
                if r != 0 or levels < 1:
                    continue
                if canon is None:
                    if not is_dow(factor):
                        break
                    canon = normalize(factor)
                if canon == gen_tangled(InsertionKind.REPEAT, nu, m, levels):
                    emit(InsertionKind.REPEAT, a, a + m, a + flen - m, a + flen)
                if m % nu == 0 and canon == gen_tangled(InsertionKind.RETURN, nu, m, levels):
                    emit(InsertionKind.RETURN, a, a + m, a + flen - m, a + flen)
    return sorted(
        found,
        key=lambda pair: (
            pair[0].kind.value,
            pair[0].k,
            pair[0].ell,
            pair[1].k,
            pair[1].ell,
        ),
    )


def verify_no_mixed(w: Word, nu_max: int) -> SweepReport:
    """Scan all mixed-kind pairs of distinct nontrivial insertions into w for
    equivalences; any hit is a counterexample and lands in failures."""
    _require_canonical_dow(w)
    if nu_max < 2:
        raise ValueError("nu_max must be >= 2")
    report = SweepReport(f"no-mixed-kind-equivalences({format_word(w) or '-'})")
    n = len(w)
    per_kind = (n + 1) * (n + 2) // 2
    for nu in range(2, nu_max + 1):
        report.checked += per_kind * per_kind
        for pair_report in enumerate_equivalent_pairs(w, nu):
            if pair_report.spec1.kind is not pair_report.spec2.kind:
                report.failures.append(
                    f"nu={nu}: {pair_report.spec1} ~ {pair_report.spec2}"
                )
    return report


def verify_sequential_gaps(w: Word, nu: int) -> SweepReport:
    """Gap arithmetic on every equivalent sequential pair of length nu:
    k2 - ell1 is at least nu, divisible by 2 nu, and k1 = ell1 forces
    k2 = ell2."""
    report = SweepReport(f"sequential-gaps({format_word(w) or '-'},nu={nu})")
    for pr in enumerate_equivalent_pairs(w, nu, include_trivial=True):
        s1, s2 = sorted((pr.spec1, pr.spec2), key=_spec_order)
        try:
            ptype = classify_positions(s1, s2)
        except ValueError:
            continue
        if ptype is not PairPositionType.SEQUENTIAL:
            continue
        report.checked += 1
        gap = s2.k - s1.ell
        if gap < nu:
            report.failures.append(f"{s1},{s2}: gap {gap} below nu")
        if gap % (2 * nu) != 0:
            report.failures.append(f"{s1},{s2}: gap {gap} not a multiple of 2nu")
        if s1.k == s1.ell and s2.k != s2.ell:
            report.failures.append(f"{s1},{s2}: k1 = ell1 but k2 != ell2")
    return report


def verify_structure_witnesses(w: Word, nu: int) -> SweepReport:
    """Every equivalent same-kind pair of length nu >= 2 must carry its
    table witness."""
    if nu < 2:
        raise ValueError("the witness sweep needs nu >= 2")
    report = SweepReport(f"structure-witnesses({format_word(w) or '-'},nu={nu})")
    for pr in enumerate_equivalent_pairs(w, nu):
        if pr.spec1.kind is not pr.spec2.kind:
            continue
        report.checked += 1
        if pr.witness is None:
            report.failures.append(f"{pr.spec1},{pr.spec2}: no structural witness")
    return report


def verify_generator_families(
    nu_max: int, h_max: int = 4, m_max: int = 6, level_max: int = 4
) -> SweepReport:
    """Family-level properties over a parameter grid.

    Checks that every generated word is a palindrome, that growing a cord by
    one level matches inserting at the head positions (1, m + 1), that cord
    parameters are recoverable (repeat cords above level 1 and all return
    cords are pairwise inequivalent), and that the two flavors coincide at
    nu = 1.
    """
    if nu_max < 1:
        raise ValueError("nu_max must be >= 1")
    report = SweepReport("generator-families")
    for nu in range(1, nu_max + 1):
        for h in range(1, h_max + 1):
            for ctor, tag in ((gen_int, "int"), (gen_nes, "nes")):
                word = ctor(h, nu)
                report.checked += 1
                if not is_palindrome(word):
                    report.failures.append(f"{tag}({h},{nu}) is not a palindrome")
    seen: dict[InsertionKind, dict[Word, tuple[int, int, int]]] = {
        InsertionKind.REPEAT: {},
        InsertionKind.RETURN: {},
    }
    for sigma in (InsertionKind.REPEAT, InsertionKind.RETURN):
        for nu in range(1, nu_max + 1):
            for m in range(0, m_max + 1):
                if sigma is InsertionKind.RETURN and m % nu != 0:
                    continue
                for level in range(1, level_max + 1):
                    word = gen_tangled(sigma, nu, m, level)
                    label = f"{sigma.value}-cord({nu},{m},{level})"
                    report.checked += 1
                    if not is_palindrome(word):
                        report.failures.append(f"{label} is not a palindrome")
                    prev = gen_tangled(sigma, nu, m, level - 1)
                    stepped = insert(prev, InsertionSpec(sigma, nu, 1, m + 1))
                    report.checked += 1
                    if normalize(stepped) != word:
                        report.failures.append(f"{label} misses the head-insertion identity")
                    prior = seen[sigma].get(word)
                    report.checked += 1
                    if prior is None:
                        seen[sigma][word] = (nu, m, level)
                    elif prior != (nu, m, level):
                        # repeat cords at level 1 are plain repeat words and may
                        # legitimately coincide across parameters
                        if not (
                            sigma is InsertionKind.REPEAT
                            and level == 1
                            and prior[2] == 1
                        ):
                            report.failures.append(
                                f"{label} collides with {sigma.value}-cord{prior}"
                            )
    for m in range(0, m_max + 1):
        for level in range(1, level_max + 1):
            report.checked += 1
            if gen_tangled(InsertionKind.REPEAT, 1, m, level) != gen_tangled(
                InsertionKind.RETURN, 1, m, level
            ):
                report.failures.append(f"nu=1 cord flavors differ at ({m},{level})")
    return report


def remark_tail_word(w: Word, witness: StructureWitness, nu: int) -> Word:
    """For a sequential witness, the word z1 z2 u z3 u' built from the second
    insertion of the pair; equivalent to the cord one level up."""
    if witness.pair_type is not PairPositionType.SEQUENTIAL:
        raise ValueError("tail words are defined for sequential witnesses")
    _, z1, z2, z3, _ = witness.segments
    u = inserted_sow(w, nu)
    second = u if witness.kinds[0] is InsertionKind.REPEAT else reverse(u)
    return z1 + z2 + u + z3 + second


def pair_type_of(s1: InsertionSpec, s2: InsertionSpec) -> PairPositionType | None:
    """Position type of an unordered pair, None when unclassifiable."""
    s1, s2 = sorted((s1, s2), key=_spec_order)
    try:
        return classify_positions(s1, s2)
    except ValueError:
        return None


def report_line(w: Word, pr: PairReport) -> str:
    """One-line text form of a pair report."""
    ptype = pr.witness.pair_type if pr.witness else pair_type_of(pr.spec1, pr.spec2)
    family = pr.witness.family if pr.witness else None
    return (
        f"w={format_word(w) or '-'} s1={pr.spec1} s2={pr.spec2} "
        f"equiv={'true' if pr.equivalent else 'false'} "
        f"type={ptype.value if ptype else '-'} family={family or '-'}"
    )


def report_dict(w: Word, pr: PairReport) -> dict:
    """JSON-ready form of a pair report, mirroring report_line field for field."""
    ptype = pr.witness.pair_type if pr.witness else pair_type_of(pr.spec1, pr.spec2)
    family = pr.witness.family if pr.witness else None
    return {
        "w": format_word(w) or "-",
        "s1": str(pr.spec1),
        "s2": str(pr.spec2),
        "equiv": pr.equivalent,
        "type": ptype.value if ptype else "-",
        "family": family or "-",
    }
