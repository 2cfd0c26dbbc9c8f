"""Table rendering and golden-table storage.

Golden files hold the reference tables as structured monomial data; they are
compared monomial-by-monomial, never as raw strings.  Rows marked `partial`
are compared only on the monomials they list.
"""

from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from .bisymseries import BiSymSeries
from .partitions import format_partition, parse_partition, specht_dimension
from .uvpoly import NotDiagonalError, UVPoly, parse_uvpoly, poincare_str

GOLDEN_DIR = Path(__file__).parent / "data" / "golden"

FORMS = ("hodge", "poincare", "numeric", "weight0")
BASES = ("schur", "power")
FORMATS = ("text", "csv", "latex")


@dataclass(frozen=True)
class TableSpec:
    """Rendering request for a heavy/light table."""

    genus: int
    variant: str
    basis: str = "schur"
    form: str = "hodge"
    max_arity: int = 5
    fmt: str = "text"

    def __post_init__(self):
        if self.form not in FORMS:
            raise ValueError(f"unknown form {self.form!r}")
        if self.basis not in BASES:
            raise ValueError(f"unknown basis {self.basis!r}")
        if self.fmt not in FORMATS:
            raise ValueError(f"unknown format {self.fmt!r}")
        if self.form == "poincare" and not (
            self.variant == "closed" and self.genus == 1 and self.max_arity <= 10
        ):
            raise ValueError(
                "poincare form requires the closed variant in the proven-diagonal "
                "range (genus 1, total arity <= 10)"
            )


def parse_tpoly(text: str) -> dict:
    """Parse a polynomial in t, e.g. 't^4+2*t^2+1' -> {4:1, 2:2, 0:1}."""
    out: dict = {}
    for raw in text.replace("-", "+-").split("+"):
        term = raw.strip()
        if not term:
            continue
        sign = Fraction(1)
        if term.startswith("-"):
            sign = Fraction(-1)
            term = term[1:]
        if "t^" in term:
            if "*" in term:
                coeff_s, exp_s = term.split("*", 1)
                coeff = Fraction(coeff_s)
            else:
                coeff = Fraction(1)
                exp_s = term
            exp = int(exp_s[2:])
        else:
            coeff = Fraction(term)
            exp = 0
        out[exp] = out.get(exp, Fraction(0)) + sign * coeff
    return {e: c for e, c in out.items() if c}


def tpoly_to_uv(tpoly: dict) -> UVPoly:
    """Interpret t^{2k} as (uv)^k; odd powers of t are rejected."""
    terms = {}
    for e, c in tpoly.items():
        if e % 2:
            raise ValueError("odd power of t cannot be a uv-polynomial")
        terms[(e // 2, e // 2)] = c
    return UVPoly(terms)


# -- golden files ---------------------------------------------------------------


@dataclass
class GoldenRow:
    m: int
    n: int
    mode: str  # full | partial | inferred
    pairs: dict  # (lam, mu) -> dict {t-exponent: coeff}
    numeric: Fraction | None = None


def parse_golden_pairs(path: Path) -> list:
    """Parse a pair-table golden file into GoldenRow records."""
    rows: list = []
    cur = None
    for lineno, raw in enumerate(path.read_text().splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("row"):
            fields = line.split()
            m, n = int(fields[1]), int(fields[2])
            mode = fields[3] if len(fields) > 3 else "full"
            cur = GoldenRow(m=m, n=n, mode=mode, pairs={})
            rows.append(cur)
        elif line.startswith("pair"):
            head, poly_s = line.split(":", 1)
            _, lam_s, mu_s = head.split()
            cur.pairs[(parse_partition(lam_s), parse_partition(mu_s))] = parse_tpoly(
                poly_s.strip()
            )
        elif line.startswith("numeric"):
            cur.numeric = Fraction(line.split()[1])
        else:
            raise ValueError(f"{path.name}:{lineno}: unknown golden directive {line!r}")
    return rows


def parse_golden_numeric(path: Path) -> dict:
    """Parse a numeric golden table: map n -> (UVPoly, mode)."""
    out: dict = {}
    for lineno, raw in enumerate(path.read_text().splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if not line.startswith("row"):
            raise ValueError(f"{path.name}:{lineno}: unknown directive {line!r}")
        head, poly_s = line.split(":", 1)
        fields = head.split()
        n = int(fields[1])
        mode = fields[2] if len(fields) > 2 else "full"
        out[n] = (parse_uvpoly(poly_s.strip()), mode)
    return out


def compare_row_to_golden(component: BiSymSeries, row: GoldenRow) -> list:
    """Monomial-by-monomial comparison; returns a list of mismatch strings."""
    sch = component.to_schur_pairs()
    problems = []
    if row.mode == "partial":
        for key, tpoly in row.pairs.items():
            got = sch.get(key, UVPoly.zero())
            try:
                got_t = got.to_poincare()
            except NotDiagonalError:
                problems.append(f"pair {key}: off-diagonal coefficient {got}")
                continue
            for e, c in tpoly.items():
                if got_t.get(e, Fraction(0)) != c:
                    problems.append(
                        f"pair {key}: t^{e} coefficient {got_t.get(e, 0)} != {c}"
                    )
        return problems
    golden_uv = {k: tpoly_to_uv(tp) for k, tp in row.pairs.items()}
    for key in set(golden_uv) | set(sch):
        want = golden_uv.get(key, UVPoly.zero())
        got = sch.get(key, UVPoly.zero())
        if want != got:
            problems.append(f"pair {key}: {got} != {want}")
    return problems


def numeric_value(component: BiSymSeries, m: int, n: int) -> UVPoly:
    """Dimension specialization of an arity-(m,n) component (trace at identity)."""
    return component.trace_from_ch(m, n, (1,) * m, (1,) * n)


# -- rendering -------------------------------------------------------------------


def _poly_for_form(c: UVPoly, form: str) -> str:
    if form == "poincare":
        return poincare_str(c.to_poincare())
    if form == "weight0":
        return str(c.weight_zero())
    return str(c)


def _latex_partition(lam: tuple) -> str:
    return "{" + ",".join(str(p) for p in lam) + "}"


def render_table(spec: TableSpec, result) -> str:
    """Render a HeavyLightResult; deterministic across runs.

    Numeric form emits one row per (m, n) with the dimension-specialized
    polynomial; equivariant forms emit one line per basis monomial.
    """
    lines = []
    sep = "," if spec.fmt == "csv" else " | "
    if spec.fmt == "csv":
        header = (
            "m,n,poly"
            if spec.form == "numeric"
            else "m,n,lambda,mu,coefficient"
        )
        lines.append(header)
    for total in range(spec.max_arity + 1):
        for m in range(total + 1):
            n = total - m
            comp = result.component(m, n)
            if not comp.coeffs:
                continue
            if spec.form == "numeric":
                poly = numeric_value(comp, m, n)
                lines.append(f"{m}{sep}{n}{sep}{poly}")
                continue
            entries = (
                comp.to_schur_pairs() if spec.basis == "schur" else comp.coeffs
            )
            keys = sorted(
                entries,
                key=lambda k: (sum(k[0]), _pkey(k[0]), _pkey(k[1])),
            )
            if spec.fmt == "latex":
                tag = "s" if spec.basis == "schur" else "p"
                terms = []
                for lam, mu in keys:
                    c = _poly_for_form(entries[(lam, mu)], spec.form)
                    piece = f"({c})"
                    if lam:
                        piece += f"{tag}_{_latex_partition(lam)}^{{(1)}}"
                    if mu:
                        piece += f"{tag}_{_latex_partition(mu)}^{{(2)}}"
                    terms.append(piece)
                lines.append(f"({m},{n}) & ${' + '.join(terms)}$ \\\\")
            else:
                for lam, mu in keys:
                    c = _poly_for_form(entries[(lam, mu)], spec.form)
                    lines.append(
                        f"{m}{sep}{n}{sep}{format_partition(lam)}{sep}"
                        f"{format_partition(mu)}{sep}{c}"
                    )
    return "\n".join(lines) + "\n"


def _pkey(lam: tuple):
    return tuple(-p for p in lam)


def numeric_pair_value(tpolys: dict) -> Fraction:
    """Dimension-weighted sum of a golden row's Schur-pair data at t = 1."""
    total = Fraction(0)
    for (lam, mu), tp in tpolys.items():
        val = sum(tp.values())
        total += val * specht_dimension(lam) * specht_dimension(mu)
    return total
