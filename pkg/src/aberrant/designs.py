"""Design generators, file formats, and design-comparison summaries.

Generators cover full factorials, central composite designs, regular
two-level fractions given by defining words, and Latin hypercubes on [0, 1]
with exact rational levels.  Comparison tools map fans to total-degree
histograms.
"""

from __future__ import annotations

import csv
import itertools
import json
import random
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources
from pathlib import Path

from .cornercuts import is_generic, is_maximal_fan
from .greedy import greedy_model
from .model import Design, WeightVector, exponent_sum, parse_exact
from .parallel import map_maybe_parallel


def full_factorial(levels) -> Design:
    """Cartesian product of per-factor level sets, rows in lexicographic order."""
    levels = [list(ls) for ls in levels]
    if any(not ls for ls in levels):
        raise ValueError("every factor needs at least one level")
    exact = all(
        not isinstance(v, float) for ls in levels for v in ls
    )
    pts = list(itertools.product(*levels))
    return Design(pts, scalar_mode="exact" if exact else "float")


def central_composite(d: int, axial, center_reps: int = 1) -> Design:
    """Two-level factorial core, axial pairs at +-axial, and center replicates.

    Float mode whenever the axial distance is not rational.
    """
    if d < 2:
        raise ValueError("need d >= 2")
    if float(axial) <= 0:
        raise ValueError("axial distance must be positive")
    exact = not isinstance(axial, float)
    pts = [tuple(p) for p in itertools.product((-1, 1), repeat=d)]
    for i in range(d):
        for s in (-1, 1):
            p = [0] * d
            p[i] = s * axial
            pts.append(tuple(p))
    for _ in range(center_reps):
        pts.append(tuple([0] * d))
    return Design(pts, scalar_mode="exact" if exact else "float")


@dataclass(frozen=True)
class DefiningWord:
    """A sign relation target = sign * prod(factors), factors 1-based."""

    target: int
    factors: tuple[int, ...]
    sign: int = 1

    def __post_init__(self):
        if self.sign not in (-1, 1):
            raise ValueError("sign must be +1 or -1")
        if self.target in self.factors:
            raise ValueError("target cannot appear among its own factors")
        if len(set(self.factors)) != len(self.factors):
            raise ValueError("repeated factor in defining word")


def two_level_fraction(d: int, words) -> Design:
    """Regular two-level fraction: base factors run a full factorial, each
    word sets its target from already-determined factors."""
    words = list(words)
    targets = [w.target for w in words]
    if len(set(targets)) != len(targets):
        raise ValueError("two words set the same factor")
    for w in words:
        if not (1 <= w.target <= d) or any(not (1 <= f <= d) for f in w.factors):
            raise ValueError("factor index out of range")
    base = [i for i in range(1, d + 1) if i not in targets]

    order: list[DefiningWord] = []
    placed: set[int] = set(base)
    pending = list(words)
    while pending:
        ready = [w for w in pending if all(f in placed for f in w.factors)]
        if not ready:
            raise ValueError("cyclic defining words")
        for w in ready:
            order.append(w)
            placed.add(w.target)
            pending.remove(w)

    pts = []
    for combo in itertools.product((-1, 1), repeat=len(base)):
        value = dict(zip(base, combo))
        for w in order:
            prod = w.sign
            for f in w.factors:
                prod *= value[f]
            value[w.target] = prod
        pts.append(tuple(value[i] for i in range(1, d + 1)))
    if len(set(pts)) != len(pts):
        raise ValueError("inconsistent defining words produce repeated runs")
    return Design(pts, scalar_mode="exact")


@dataclass(frozen=True)
class LatinHypercubeSpec:
    """Latin hypercube on [0, 1]^d: axis i takes one value in each of the n
    equal segments, positions shuffled per factor."""

    n: int
    d: int
    placement: str = "midpoint"  # midpoint | left | right | random
    jitter_seed: int | None = None
    permutations: tuple[tuple[int, ...], ...] | None = None
    perm_seed: int | None = None

    JITTER_DENOM = 1 << 20


def latin_hypercube(spec: LatinHypercubeSpec) -> Design:
    n, d = spec.n, spec.d
    if n < 1 or d < 1:
        raise ValueError("need n >= 1 and d >= 1")
    if spec.permutations is not None:
        perms = [list(p) for p in spec.permutations]
        if len(perms) != d or any(sorted(p) != list(range(n)) for p in perms):
            raise ValueError("need one permutation of 0..n-1 per factor")
    else:
        rng = random.Random(spec.perm_seed)
        perms = [list(range(n))]
        for _ in range(d - 1):
            p = list(range(n))
            rng.shuffle(p)
            perms.append(p)

    jitter_rng = random.Random(spec.jitter_seed)

    def level(j: int) -> Fraction:
        if spec.placement == "midpoint":
            return Fraction(2 * j + 1, 2 * n)
        if spec.placement == "left":
            return Fraction(j, n)
        if spec.placement == "right":
            return Fraction(j + 1, n)
        if spec.placement == "random":
            u = jitter_rng.randrange(1, LatinHypercubeSpec.JITTER_DENOM)
            return Fraction(j, n) + Fraction(u, n * LatinHypercubeSpec.JITTER_DENOM)
        raise ValueError(f"unknown placement {spec.placement!r}")

    pts = []
    for r in range(n):
        pts.append(tuple(level(perms[i][r]) for i in range(d)))
    return Design(pts, scalar_mode="exact")


# ---------------------------------------------------------------------------
# file formats

def design_document(design: Design) -> dict:
    """JSON-ready dict in the design file schema."""
    if design.is_exact:
        def enc(c):
            f = Fraction(c)
            return int(f) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"
    else:
        enc = float
    doc = {
        "d": design.dimension,
        "mode": design.scalar_mode,
        "points": [[enc(c) for c in p] for p in design.points],
    }
    if not design.is_exact:
        doc["tolerance"] = design.tolerance
    return doc


def save_design(design: Design, path, fmt: str | None = None) -> None:
    path = Path(path)
    fmt = fmt or ("csv" if path.suffix.lower() == ".csv" else "json")
    if fmt == "json":
        path.write_text(json.dumps(design_document(design), indent=1) + "\n")
    elif fmt == "csv":
        with path.open("w", newline="") as fh:
            writer = csv.writer(fh)
            for p in design.points:
                if design.is_exact:
                    writer.writerow(
                        [
                            int(Fraction(c)) if Fraction(c).denominator == 1
                            else f"{Fraction(c).numerator}/{Fraction(c).denominator}"
                            for c in p
                        ]
                    )
                else:
                    writer.writerow([repr(float(c)) for c in p])
    else:
        raise ValueError(f"unknown design format {fmt!r}")


class DesignFileError(ValueError):
    pass


def _load_json(path: Path) -> Design:
    try:
        doc = json.loads(path.read_text())
    except json.JSONDecodeError as exc:
        raise DesignFileError(f"{path}: invalid JSON ({exc})") from exc
    try:
        mode = doc.get("mode", "exact")
        pts = doc["points"]
        tol = doc.get("tolerance")
    except (KeyError, AttributeError) as exc:
        raise DesignFileError(f"{path}: missing field {exc}") from exc
    if not isinstance(pts, list) or not pts:
        raise DesignFileError(f"{path}: 'points' must be a nonempty list")
    d = doc.get("d", len(pts[0]))
    for r, p in enumerate(pts):
        if len(p) != d:
            raise DesignFileError(f"{path}: row {r} has {len(p)} coordinates, expected {d}")
    kwargs = {"tolerance": tol} if tol is not None else {}
    try:
        return Design(pts, scalar_mode=mode, **kwargs)
    except (ValueError, TypeError) as exc:
        raise DesignFileError(f"{path}: {exc}") from exc


def _load_csv(path: Path) -> Design:
    rows = []
    with path.open(newline="") as fh:
        for r, row in enumerate(csv.reader(fh)):
            if not row or (len(row) == 1 and not row[0].strip()):
                continue
            if row[0].lstrip().startswith("#"):
                continue
            rows.append([cell.strip() for cell in row])
    if not rows:
        raise DesignFileError(f"{path}: empty design file")
    width = len(rows[0])
    exact = True
    pts = []
    for r, row in enumerate(rows):
        if len(row) != width:
            raise DesignFileError(f"{path}: row {r} has {len(row)} cells, expected {width}")
        parsed = []
        for c, cell in enumerate(row):
            try:
                parsed.append(parse_exact(cell))
            except (ValueError, ZeroDivisionError, TypeError):
                try:
                    parsed.append(float(cell))
                    exact = False
                except ValueError as exc:
                    raise DesignFileError(
                        f"{path}: row {r} column {c}: cannot parse {cell!r}"
                    ) from exc
        pts.append(parsed)
    if exact:
        return Design(pts, scalar_mode="exact")
    return Design([[float(c) for c in p] for p in pts], scalar_mode="float")


def load_design(path, fmt: str | None = None) -> Design:
    path = Path(path)
    if not path.exists():
        raise FileNotFoundError(path)
    fmt = fmt or ("csv" if path.suffix.lower() == ".csv" else "json")
    if fmt == "json":
        return _load_json(path)
    if fmt == "csv":
        return _load_csv(path)
    raise ValueError(f"unknown design format {fmt!r}")


def f3_design() -> Design:
    """The packaged 32-run, 7-factor nonregular two-level fraction."""
    ref = resources.files("aberrant").joinpath("data/f3.csv")
    with resources.as_file(ref) as p:
        return load_design(p, "csv")


# ---------------------------------------------------------------------------
# summaries

@dataclass(frozen=True)
class CensusResult:
    generic_fraction: Fraction
    maximal_fan_fraction: Fraction
    total_examined: int


def lh_genericity_census(
    n: int,
    d: int = 2,
    mode: str = "exhaustive",
    sample_size: int = 200,
    seed: int = 0,
    threads=None,
    check_maximal: bool = True,
) -> CensusResult:
    """Fractions of generic and maximal-fan midpoint Latin hypercubes.

    Exhaustive mode fixes the first factor's ordering (designs are point
    sets) and ranges over the n! orderings of the second factor; d = 2 only
    and n <= 9.  Sample mode draws seeded random permutations for any d.
    """
    if mode == "exhaustive":
        if d != 2:
            raise ValueError("exhaustive census is two-factor only")
        if n > 9:
            raise ValueError("exhaustive census capped at n = 9")
        perm_iter = [
            (tuple(range(n)), p) for p in itertools.permutations(range(n))
        ]
    elif mode == "sample":
        rng = random.Random(seed)
        perm_iter = []
        for _ in range(sample_size):
            ps = [tuple(range(n))]
            for _ in range(d - 1):
                p = list(range(n))
                rng.shuffle(p)
                ps.append(tuple(p))
            perm_iter.append(tuple(ps))
    else:
        raise ValueError("mode must be 'exhaustive' or 'sample'")

    def examine(perms):
        dz = latin_hypercube(
            LatinHypercubeSpec(n=n, d=d, placement="midpoint", permutations=tuple(perms))
        )
        g = is_generic(dz)
        m = is_maximal_fan(dz) if check_maximal else False
        return g, m

    results = map_maybe_parallel(examine, perm_iter, threads)
    total = len(results)
    gen = sum(1 for g, _ in results if g)
    mx = sum(1 for _, m in results if m)
    return CensusResult(Fraction(gen, total), Fraction(mx, total), total)


def degree_histogram(fan, weights=None) -> dict:
    """Counts of the weighted vertex sums over the fan (weights default to
    all ones, giving the total-degree distribution)."""
    entries = list(fan)
    if not entries:
        raise ValueError("empty fan")
    d = len(entries[0].vertex)
    ws = tuple(weights) if weights is not None else tuple([1] * d)
    if any((w if not isinstance(w, float) else w) <= 0 for w in ws):
        raise ValueError("weights must be positive")
    counts = Counter(sum(w * c for w, c in zip(ws, e.vertex)) for e in entries)
    return dict(sorted(counts.items()))


def min_total_degree(design: Design) -> int:
    """Total degree of the uniform-weight greedy model: the smallest vertex
    coordinate sum over the whole fan."""
    w = WeightVector([Fraction(1, design.dimension)] * design.dimension)
    model = greedy_model(design, w)
    return sum(exponent_sum(model))
