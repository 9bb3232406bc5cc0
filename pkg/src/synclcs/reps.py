"""Finite-dimensional *-representation engine.

Builds projection families from solution-group representations through the
spectral projections f_j(s), evaluates the generator map back from family
sums, and certifies numerically every identity linking the game algebra,
the quotient group algebra, and the isomorphism-game algebra.

Representations from classical solutions use exact cyclotomic scalars, so
their residuals are exactly zero; matrix representations use complex
floats and are judged against a Frobenius-norm tolerance.
"""

from __future__ import annotations

import cmath
import json
import warnings
from dataclasses import dataclass

import numpy as np

from .config import DEFAULT_ENUM_CAP, DEFAULT_TOL
from .cyclotomic import Cyclotomic
from .errors import (
    DimensionMismatch,
    InvariantViolation,
    JNotIdentified,
    NonCommutingFactors,
    NotASolution,
    ParseError,
    UnitarityViolation,
    VariableUnused,
)
from .graphs import build_game_graph
from .group import build_presentation, relation_residuals
from .matops import dagger, eye_like, frob, is_exact, zeros_like_mat
from .reporting import CheckRecord
from .system import LinearSystem, is_row_solution, row_solutions, row_support
from .zp import FieldElem, ZpVector, check_prime

OMEGA_CONVENTION = "exp(2*pi*i/p)"

EQUAL, ADJACENT, DISTINCT = 0, 1, 2


def _scale(M: np.ndarray, s) -> np.ndarray:
    if is_exact(M):
        out = np.empty(M.shape, dtype=object)
        for idx, e in np.ndenumerate(M):
            out[idx] = e * s
        return out
    return M * s


def _div(M: np.ndarray, k: int) -> np.ndarray:
    if is_exact(M):
        out = np.empty(M.shape, dtype=object)
        for idx, e in np.ndenumerate(M):
            out[idx] = e / k
        return out
    return M / k


@dataclass(eq=False)
class Representation:
    """Unitary matrix images for g_1..g_n and J, all of one dimension.

    omega is the principal p-th root of unity; j_identified records that
    image(J) = omega * I, i.e. the representation factors through the
    quotient identifying J with omega.
    """

    p: int
    dim: int
    images: dict[str, np.ndarray]
    j_identified: bool
    exact: bool

    @property
    def n(self) -> int:
        return sum(1 for k in self.images if k != "J")

    def image(self, name: str) -> np.ndarray:
        return self.images[name]

    def omega_pow(self, k: int):
        if self.exact:
            return Cyclotomic.omega_power(self.p, k)
        return cmath.exp(2j * cmath.pi * (k % self.p) / self.p)


def make_representation(
    p: int,
    images: dict[str, np.ndarray],
    tol: float = DEFAULT_TOL,
    require_j_identified: bool = True,
) -> Representation:
    """Validate unitarity and the J = omega*I identification."""
    check_prime(p)
    if "J" not in images:
        raise ParseError("representation must include an image for J")
    dims = {M.shape for M in images.values()}
    if len(dims) != 1:
        raise DimensionMismatch("generator images have mixed dimensions")
    (d1, d2), = dims
    if d1 != d2:
        raise DimensionMismatch("generator images must be square")
    exact = any(is_exact(M) for M in images.values())
    for name, M in images.items():
        residual = frob(M @ dagger(M) - eye_like(M))
        if residual > tol:
            raise UnitarityViolation(
                f"image of {name} is not unitary (residual {residual:.3e})"
            )
    jmat = images["J"]
    omega = (
        Cyclotomic.omega_power(p, 1) if exact else cmath.exp(2j * cmath.pi / p)
    )
    j_residual = frob(jmat - _scale(eye_like(jmat), omega))
    identified = j_residual <= tol
    if not identified:
        if require_j_identified:
            raise JNotIdentified(
                f"image(J) differs from omega*I by {j_residual:.3e}"
            )
        warnings.warn(
            f"image(J) differs from omega*I by {j_residual:.3e}; "
            "quotient-dependent checks will be skipped",
            stacklevel=2,
        )
    return Representation(p, d1, dict(images), identified, exact)


def scalar_rep_from_solution(sys: LinearSystem, xstar: ZpVector) -> Representation:
    """The 1-dimensional representation g_j -> omega^{x*_j}, J -> omega.

    Exists exactly when xstar solves the system; carried in exact
    cyclotomic arithmetic so every certified identity has residual 0.
    """
    if xstar.p != sys.p or len(xstar) != sys.n:
        raise DimensionMismatch("solution shape or modulus disagrees with system")
    if sys.A.apply(xstar) != sys.b:
        raise NotASolution("xstar does not solve the system")
    p = sys.p

    def one_by_one(value) -> np.ndarray:
        M = np.empty((1, 1), dtype=object)
        M[0, 0] = value
        return M

    images = {
        f"g{j}": one_by_one(Cyclotomic.omega_power(p, xstar.entry(j)))
        for j in range(1, sys.n + 1)
    }
    images["J"] = one_by_one(Cyclotomic.omega_power(p, 1))
    return make_representation(p, images)


_PAULI = {
    "I": np.eye(2, dtype=complex),
    "X": np.array([[0, 1], [1, 0]], dtype=complex),
    "Y": np.array([[0, -1j], [1j, 0]], dtype=complex),
    "Z": np.array([[1, 0], [0, -1]], dtype=complex),
}


def pauli_magic_square_rep() -> Representation:
    """The canonical 4-dimensional operator solution of the magic square.

    Two-qubit Pauli products arranged so each grid row and the first two
    grid columns multiply to +I while the last column multiplies to -I;
    J maps to -I.
    """
    table = [
        ("IZ", "ZI", "ZZ"),
        ("XI", "IX", "XX"),
        ("XZ", "ZX", "YY"),
    ]
    images = {}
    for r in range(3):
        for c in range(3):
            name = table[r][c]
            images[f"g{3 * r + c + 1}"] = np.kron(_PAULI[name[0]], _PAULI[name[1]])
    images["J"] = -np.eye(4, dtype=complex)
    return make_representation(2, images)


def conjugate_representation(
    rep: Representation, U: np.ndarray, tol: float = DEFAULT_TOL
) -> Representation:
    """Simultaneous unitary conjugation M -> U M U* of all images."""
    images = {name: U @ M @ dagger(U) for name, M in rep.images.items()}
    return make_representation(rep.p, images, tol=tol,
                               require_j_identified=rep.j_identified)


def f_projection(rep: Representation, j: int, s) -> np.ndarray:
    """Spectral projection (1/p) sum_t (omega^{-s} g_j)^t onto the
    omega^s-eigenspace of the image of g_j."""
    if isinstance(s, FieldElem):
        s = s.value
    M = _scale(rep.image(f"g{j}"), rep.omega_pow(-s))
    total = eye_like(M)
    term = eye_like(M)
    for _ in range(1, rep.p):
        term = term @ M
        total = total + term
    return _div(total, rep.p)


def psi_image(
    rep: Representation,
    sys: LinearSystem,
    i: int,
    x: ZpVector,
    tol: float = DEFAULT_TOL,
) -> np.ndarray:
    """Image of the game-algebra generator for (row i, solution x): the
    product of the per-variable spectral projections over the row support.

    The product is only order-independent when the row's generator images
    commute, so that is verified rather than assumed.
    """
    if not is_row_solution(sys, i, x):
        raise NotASolution(f"x is not a restricted solution of row {i}")
    cols = sorted(row_support(sys, i))
    for a, jcol in enumerate(cols):
        for ell in cols[a + 1:]:
            gj, gl = rep.image(f"g{jcol}"), rep.image(f"g{ell}")
            residual = frob(gj @ gl - gl @ gj)
            if residual > tol:
                raise NonCommutingFactors(
                    f"images of g{jcol}, g{ell} fail to commute in row {i} "
                    f"(residual {residual:.3e})"
                )
    sample = rep.image("J")
    result = eye_like(sample)
    for jcol in cols:
        result = result @ f_projection(rep, jcol, x.entry(jcol))
    return result


@dataclass(eq=False)
class ProjectionFamily:
    """The matrices standing for the game-algebra generators, one per
    (row, solution) pair, built through the spectral projections."""

    system: LinearSystem
    p: int
    dim: int
    exact: bool
    entries: dict  # (i, ZpVector) -> matrix
    solutions: dict  # i -> list[ZpVector]

    def entry(self, i: int, x: ZpVector) -> np.ndarray:
        return self.entries[(i, x)]

    def omega_pow(self, k: int):
        if self.exact:
            return Cyclotomic.omega_power(self.p, k)
        return cmath.exp(2j * cmath.pi * (k % self.p) / self.p)

    def sample(self) -> np.ndarray:
        return next(iter(self.entries.values()))


def _vec_label(x: ZpVector) -> str:
    return "(" + ",".join(str(e) for e in x.entries) + ")"


def _assemble_family(
    rep: Representation, sys: LinearSystem, tol: float, cap: int
) -> ProjectionFamily:
    solutions = {i: row_solutions(sys, i, cap) for i in range(1, sys.m + 1)}
    entries = {}
    for i, sols in solutions.items():
        for x in sols:
            entries[(i, x)] = psi_image(rep, sys, i, x, tol)
    return ProjectionFamily(
        system=sys,
        p=rep.p,
        dim=rep.dim,
        exact=rep.exact,
        entries=entries,
        solutions=solutions,
    )


def projection_family_checks(
    fam: ProjectionFamily, tol: float = DEFAULT_TOL
) -> list[CheckRecord]:
    """Idempotency, self-adjointness, orthogonality on incompatible pairs,
    and the per-row resolutions of identity."""
    records = []
    for (i, x), E in fam.entries.items():
        records.append(CheckRecord(
            f"psi-idempotent:{i}:{_vec_label(x)}", frob(E @ E - E), tol))
        records.append(CheckRecord(
            f"psi-selfadjoint:{i}:{_vec_label(x)}", frob(dagger(E) - E), tol))

    sys = fam.system
    supports = {i: row_support(sys, i) for i in fam.solutions}
    keys = sorted(fam.entries.keys(), key=lambda k: (k[0], k[1].entries))
    for a, (i, x) in enumerate(keys):
        for (k, y) in keys[a + 1:]:
            shared = supports[i] & supports[k]
            if all(x.entry(c) == y.entry(c) for c in shared):
                continue  # compatible pair: no orthogonality demanded
            residual = frob(fam.entry(i, x) @ fam.entry(k, y))
            records.append(CheckRecord(
                f"psi-orthogonal:{i}:{_vec_label(x)}|{k}:{_vec_label(y)}",
                residual, tol))

    for i, sols in fam.solutions.items():
        if not sols:
            continue
        total = zeros_like_mat(fam.sample())
        for x in sols:
            total = total + fam.entry(i, x)
        records.append(CheckRecord(
            f"psi-rowsum:{i}", frob(total - eye_like(total)), tol))
    return records


def build_projection_family(
    rep: Representation,
    sys: LinearSystem,
    tol: float = DEFAULT_TOL,
    cap: int = DEFAULT_ENUM_CAP,
) -> ProjectionFamily:
    """Build the family and enforce all of its defining checks.

    Requires the representation to identify J with omega (the quotient
    the game algebra lives in); the first failing check aborts.
    """
    if not rep.j_identified:
        raise JNotIdentified("projection families need image(J) = omega*I")
    fam = _assemble_family(rep, sys, tol, cap)
    for rec in projection_family_checks(fam, tol):
        if not rec.passed:
            raise InvariantViolation(rec.name, rec.residual, rec.tolerance)
    return fam


@dataclass
class PhiImage:
    """Result of evaluating the generator map on variable j: the canonical
    matrix (from the lowest row containing j) plus the worst disagreement
    with the same sum taken over every other containing row."""

    matrix: np.ndarray
    row: int
    rows: list[int]
    cross_row_discrepancy: float


def rows_containing(sys: LinearSystem, j: int) -> list[int]:
    return [i for i in range(1, sys.m + 1) if j in row_support(sys, i)]


def phi_image(fam: ProjectionFamily, j: int) -> PhiImage:
    """phi(g_j) = sum over x in S_i of omega^{x_j} * family(i, x), where i
    is the lowest row whose support contains j; all other containing rows
    are evaluated too and the maximum discrepancy reported rather than
    averaged (averaging would mask well-definedness failures)."""
    sys = fam.system
    rows = rows_containing(sys, j)
    if not rows:
        raise VariableUnused(f"variable {j} appears in no row")
    per_row = {}
    for i in rows:
        total = zeros_like_mat(fam.sample())
        for x in fam.solutions[i]:
            total = total + _scale(fam.entry(i, x), fam.omega_pow(x.entry(j)))
        per_row[i] = total
    canonical = rows[0]
    discrepancy = max(
        (frob(per_row[i] - per_row[canonical]) for i in rows[1:]), default=0.0
    )
    return PhiImage(per_row[canonical], canonical, rows, discrepancy)


def p_block(fam: ProjectionFamily, i: int, j: int, t: int) -> np.ndarray:
    """Sum of family entries of row i whose solution has value t at j."""
    total = zeros_like_mat(fam.sample())
    for x in fam.solutions[i]:
        if x.entry(j) == t % fam.p:
            total = total + fam.entry(i, x)
    return total


def phi_welldefinedness_checks(
    fam: ProjectionFamily, tol: float = DEFAULT_TOL
) -> list[CheckRecord]:
    """Cross-row agreement of phi(g_j) and of every value block: the sums
    over solutions with a fixed value at j must not depend on which
    containing row is used."""
    records = []
    sys = fam.system
    for j in range(1, sys.n + 1):
        rows = rows_containing(sys, j)
        if not rows:
            continue
        result = phi_image(fam, j)
        records.append(CheckRecord(
            f"phi-welldefined:g{j}", result.cross_row_discrepancy, tol,
            detail={"rows": rows}))
        for t in range(fam.p):
            blocks = [p_block(fam, i, j, t) for i in rows]
            residual = max(
                (frob(bq - blocks[0]) for bq in blocks[1:]), default=0.0
            )
            records.append(CheckRecord(
                f"phi-valueblock:g{j}:t={t}", residual, tol))
    return records


def check_mutual_inverse(
    rep: Representation,
    sys: LinearSystem,
    tol: float = DEFAULT_TOL,
    fam: ProjectionFamily | None = None,
    cap: int = DEFAULT_ENUM_CAP,
) -> list[CheckRecord]:
    """Both round trips of the generator maps.

    (a) reconstructing each g_ell from weighted family sums over every row
    containing ell must return the original image; (b) evaluating the
    spectral-projection product built from the reconstructed generators
    must return each family entry.
    """
    if fam is None:
        fam = build_projection_family(rep, sys, tol, cap)
    records = []
    for ell in range(1, sys.n + 1):
        rows = rows_containing(sys, ell)
        for i in rows:
            total = zeros_like_mat(fam.sample())
            for x in fam.solutions[i]:
                total = total + _scale(fam.entry(i, x), fam.omega_pow(x.entry(ell)))
            records.append(CheckRecord(
                f"roundtrip-generator:g{ell}:row{i}",
                frob(total - rep.image(f"g{ell}")), tol))

    phi_cache = {
        j: phi_image(fam, j).matrix
        for j in range(1, sys.n + 1)
        if rows_containing(sys, j)
    }
    for i in sorted(fam.solutions):
        cols = sorted(row_support(sys, i))
        for y in fam.solutions[i]:
            result = eye_like(fam.sample())
            for j in cols:
                M = _scale(phi_cache[j], fam.omega_pow(-y.entry(j)))
                total = eye_like(M)
                term = eye_like(M)
                for _ in range(1, fam.p):
                    term = term @ M
                    total = total + term
                result = result @ _div(total, fam.p)
            records.append(CheckRecord(
                f"roundtrip-projection:{i}:{_vec_label(y)}",
                frob(result - fam.entry(i, y)), tol))
    return records


@dataclass(eq=False)
class IsoGeneratorFamily:
    """Matrices for the isomorphism-game generators indexed by pairs of an
    inhomogeneous-graph vertex and a homogeneous-graph vertex; all
    cross-row entries are zero."""

    family: ProjectionFamily
    g_vertices: list  # (i, x in S_i(A,b))
    h_vertices: list  # (j, y in S_j(A,0))
    entries: dict  # ((i,x),(j,y)) -> matrix, only i == j stored
    zero: np.ndarray

    def entry(self, vg, vh) -> np.ndarray:
        return self.entries.get((vg, vh), self.zero)

    def is_structurally_zero(self, vg, vh) -> bool:
        return (vg, vh) not in self.entries


def iso_generator_images(
    fam: ProjectionFamily, cap: int = DEFAULT_ENUM_CAP
) -> IsoGeneratorFamily:
    """E over vertex pairs: zero across different rows, and the family
    entry at the translated solution x + y within one row (adding a
    homogeneous row solution keeps the inhomogeneous-row solution set)."""
    sys = fam.system
    hom = sys.homogeneous()
    hom_solutions = {i: row_solutions(hom, i, cap) for i in range(1, sys.m + 1)}
    g_vertices = [(i, x) for i in sorted(fam.solutions) for x in fam.solutions[i]]
    h_vertices = [(j, y) for j in sorted(hom_solutions) for y in hom_solutions[j]]
    entries = {}
    for i in sorted(fam.solutions):
        for x in fam.solutions[i]:
            for y in hom_solutions[i]:
                shifted = x + y
                entries[((i, x), (i, y))] = fam.entry(i, shifted)
    return IsoGeneratorFamily(fam, g_vertices, h_vertices, entries,
                              zeros_like_mat(fam.sample()))


def iso_partition_checks(
    iso: IsoGeneratorFamily, tol: float = DEFAULT_TOL
) -> list[CheckRecord]:
    """Both partition-of-unity identities: summing E over all vertices of
    either graph, the other one held fixed, gives the identity."""
    records = []
    for vh in iso.h_vertices:
        total = zeros_like_mat(iso.zero)
        for vg in iso.g_vertices:
            if not iso.is_structurally_zero(vg, vh):
                total = total + iso.entry(vg, vh)
        records.append(CheckRecord(
            f"iso-sum-over-inhomogeneous:{vh[0]}:{_vec_label(vh[1])}",
            frob(total - eye_like(total)), tol))
    for vg in iso.g_vertices:
        total = zeros_like_mat(iso.zero)
        for vh in iso.h_vertices:
            if not iso.is_structurally_zero(vg, vh):
                total = total + iso.entry(vg, vh)
        records.append(CheckRecord(
            f"iso-sum-over-homogeneous:{vg[0]}:{_vec_label(vg[1])}",
            frob(total - eye_like(total)), tol))
    return records


def _relationship_codes(graph, vertices) -> np.ndarray:
    d = len(vertices)
    codes = np.full((d, d), DISTINCT, dtype=np.int8)
    np.fill_diagonal(codes, EQUAL)
    for a in range(d):
        for bq in range(d):
            if a != bq and graph.adjacent(vertices[a], vertices[bq]):
                codes[a, bq] = ADJACENT
    return codes


def check_iso_relations(
    iso: IsoGeneratorFamily, G, H, tol: float = DEFAULT_TOL
) -> list[CheckRecord]:
    """Rule orthogonality plus idempotency/self-adjointness of every E.

    A quadruple of generators must multiply to zero whenever the two
    inhomogeneous-graph vertices relate (equal / adjacent / distinct
    non-adjacent) differently from the two homogeneous-graph vertices.
    Quadruples with a structurally zero factor vanish exactly and are only
    counted.  For the rest, the product is family(i, x+y) family(i', x'+y'),
    and the translated pairs (x+y, x'+y') arising from rule-zero quadruples
    are exactly the adjacent vertex pairs of the inhomogeneous graph: a
    relationship mismatch forces a coordinate conflict in the sums, and
    conversely any conflicting pair is reached by taking both homogeneous
    parts zero.  So checking every adjacent-pair product covers every
    rule-zero quadruple without repeating identical matrix products.
    """
    g_verts, h_verts = iso.g_vertices, iso.h_vertices
    rel_g = _relationship_codes(G, g_verts)
    rel_h = _relationship_codes(H, h_verts)

    idem_max, adj_max = 0.0, 0.0
    for (vg, vh) in iso.entries:
        E = iso.entry(vg, vh)
        idem_max = max(idem_max, frob(E @ E - E))
        adj_max = max(adj_max, frob(dagger(E) - E))

    # rule-zero quadruples over the full generator grid, and the subset
    # whose factors are both structurally nonzero (same-row generators)
    pair_counts_g = np.bincount(rel_g.ravel(), minlength=3)
    pair_counts_h = np.bincount(rel_h.ravel(), minlength=3)
    total_zero_quadruples = int(
        pair_counts_g.sum() * pair_counts_h.sum()
        - (pair_counts_g * pair_counts_h).sum()
    )
    rows_g = np.array([v[0] for v in g_verts])
    rows_h = np.array([v[0] for v in h_verts])
    nonzero_mismatches = 0
    for i in sorted(set(rows_g.tolist())):
        for ip in sorted(set(rows_g.tolist())):
            sub_g = rel_g[np.ix_(rows_g == i, rows_g == ip)]
            sub_h = rel_h[np.ix_(rows_h == i, rows_h == ip)]
            cg = np.bincount(sub_g.ravel(), minlength=3)
            ch = np.bincount(sub_h.ravel(), minlength=3)
            nonzero_mismatches += int(cg.sum() * ch.sum() - (cg * ch).sum())

    fam = iso.family
    product_max = 0.0
    products = 0
    gindex = {v: k for k, v in enumerate(G.vertices)}
    verts = list(G.vertices)
    for a, u in enumerate(verts):
        for bq in range(a + 1, len(verts)):
            v = verts[bq]
            if G.adj[gindex[u], gindex[v]]:
                products += 1
                product_max = max(
                    product_max,
                    frob(fam.entry(*u) @ fam.entry(*v)),
                    frob(fam.entry(*v) @ fam.entry(*u)),
                )

    n_gen = len(g_verts) * len(h_verts)
    return [
        CheckRecord("iso-idempotent", idem_max, tol,
                    detail={"generators": n_gen, "nonzero": len(iso.entries)}),
        CheckRecord("iso-selfadjoint", adj_max, tol,
                    detail={"generators": n_gen, "nonzero": len(iso.entries)}),
        CheckRecord(
            "iso-rule-orthogonality", product_max, tol,
            detail={
                "zero_quadruples": total_zero_quadruples,
                "with_nonzero_factors": nonzero_mismatches,
                "trivially_zero": total_zero_quadruples - nonzero_mismatches,
                "distinct_products": products,
            },
        ),
    ]


def psi_iso_consistency_checks(
    iso: IsoGeneratorFamily, tol: float = DEFAULT_TOL
) -> list[CheckRecord]:
    """The reverse generator map into the isomorphism-game algebra: for
    each (i, x), summing E over the homogeneous zero-solution column per
    row recovers the family entry.  Structural by construction; this
    guards the implementation."""
    records = []
    fam = iso.family
    sys = fam.system
    zero_vec = ZpVector.zero(sys.p, sys.n)  # solves every homogeneous row
    for (i, x) in iso.g_vertices:
        total = zeros_like_mat(iso.zero)
        for k in range(1, sys.m + 1):
            total = total + iso.entry((i, x), (k, zero_vec))
        records.append(CheckRecord(
            f"iso-zero-column:{i}:{_vec_label(x)}",
            frob(total - fam.entry(i, x)), tol))
    return records


def run_check_suite(
    rep: Representation,
    sys: LinearSystem,
    tol: float = DEFAULT_TOL,
    cap: int = DEFAULT_ENUM_CAP,
) -> list[CheckRecord]:
    """The full certification pipeline, in order: group relations, family
    invariants, generator-map well-definedness, both round trips, the
    partition identities of the isomorphism-game family, and its rule
    orthogonality."""
    records = relation_residuals(rep, build_presentation(sys), tol)
    fam = _assemble_family(rep, sys, tol, cap)
    records += projection_family_checks(fam, tol)
    records += phi_welldefinedness_checks(fam, tol)
    records += check_mutual_inverse(rep, sys, tol, fam=fam, cap=cap)
    iso = iso_generator_images(fam, cap)
    records += iso_partition_checks(iso, tol)
    G = build_game_graph(sys, homogeneous=False, cap=cap)
    H = build_game_graph(sys, homogeneous=True, cap=cap)
    records += check_iso_relations(iso, G, H, tol)
    records += psi_iso_consistency_checks(iso, tol)
    return records


def representation_to_json(rep: Representation) -> dict:
    """Serialize to the matrix JSON schema (floats; exact entries embed)."""

    def encode(M: np.ndarray) -> list:
        out = []
        for r in range(M.shape[0]):
            row = []
            for c in range(M.shape[1]):
                z = complex(M[r, c])
                row.append([z.real, z.imag])
            out.append(row)
        return out

    names = [f"g{j}" for j in range(1, rep.n + 1)] + ["J"]
    return {
        "p": rep.p,
        "dim": rep.dim,
        "omega_convention": OMEGA_CONVENTION,
        "generators": {name: encode(rep.images[name]) for name in names},
    }


def save_representation(rep: Representation, path: str):
    with open(path, "w") as fh:
        json.dump(representation_to_json(rep), fh, indent=2)
        fh.write("\n")


def representation_from_json(
    doc: dict, tol: float = DEFAULT_TOL, require_j_identified: bool = True
) -> Representation:
    try:
        p = int(doc["p"])
        dim = int(doc["dim"])
        convention = doc["omega_convention"]
        generators = doc["generators"]
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"malformed representation document: {exc}") from exc
    if convention != OMEGA_CONVENTION:
        raise ParseError(
            f"unsupported omega convention {convention!r}; "
            f"expected {OMEGA_CONVENTION!r}"
        )
    if "J" not in generators:
        raise ParseError("missing generator J")
    n = len(generators) - 1
    expected = {f"g{j}" for j in range(1, n + 1)} | {"J"}
    if set(generators) != expected:
        raise ParseError(f"generator names must be g1..g{n} and J")
    images = {}
    for name, rows in generators.items():
        if len(rows) != dim or any(len(r) != dim for r in rows):
            raise ParseError(f"matrix for {name} is not {dim}x{dim}")
        M = np.empty((dim, dim), dtype=complex)
        for r in range(dim):
            for c in range(dim):
                entry = rows[r][c]
                if not (isinstance(entry, (list, tuple)) and len(entry) == 2):
                    raise ParseError(f"entry ({r},{c}) of {name} is not [re, im]")
                M[r, c] = complex(float(entry[0]), float(entry[1]))
        images[name] = M
    return make_representation(p, images, tol, require_j_identified)


def load_representation(
    path: str, tol: float = DEFAULT_TOL, require_j_identified: bool = True
) -> Representation:
    try:
        with open(path) as fh:
            doc = json.load(fh)
    except json.JSONDecodeError as exc:
        raise ParseError(f"not valid JSON: {exc}") from exc
    return representation_from_json(doc, tol, require_j_identified)
