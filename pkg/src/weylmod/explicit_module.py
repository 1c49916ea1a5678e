"""Explicit truncated realization of Weyl modules over sl2 / sl3 loop algebras.

The induced module Ind(M)_kappa is, by PBW, free as a module over the
enveloping algebra of the negative-mode half: a basis of the degree-n layer is

    (x_{p_1} eps^{-k_1}) ... (x_{p_r} eps^{-k_r}) (x) m_j,
    k_1 >= k_2 >= ... >= k_r >= 1,  sum k_i = n,

with x_p running over a fixed Chevalley basis of g and m_j over a weight basis
of M.  We materialize all layers up to a depth N and straighten the action of
any x eps^m back into this basis using

    [x eps^a, y eps^b] = [x, y] eps^{a+b} + a delta_{a,-b} (x, y) K,

with K acting by the scalar kappa - h_dual.  The zero modes act through M and
the positive modes kill it.  All coefficients are exact: Fraction throughout,
ComplexRational once kappa leaves the rationals.

On top of the raw action the module offers the brute-force oracles used to
cross-check the resonance bookkeeping: the normally-ordered Sugawara L0, the
Virasoro commutator identity [L0, x eps^m] = -m x eps^m, exact singular-vector
kernels, and the nested annihilators V(N') of positive-degree monomials
together with the exactness check ker(V(N') -> Hom(g, V(N'-1))) = V(1).
"""

from __future__ import annotations

import os
from fractions import Fraction

from .affine_numerics import candidate_pairs, top_l0_eigenvalue
from .chevalley import chevalley_basis, rep_from_hw
from .finite_rep import casimir_on_irrep
from .graded_sym import sym_ad_graded
from .linalg import SpanBuilder, nullspace
from .rational import ComplexRational, format_scalar, scalar_im, scalar_re
from .root_system import Weight, same_weyl_orbit

DEPTH_CAP_ENV = "WEYLMOD_DEPTH_CAP"
_DEFAULT_DEPTH_CAP = 6

# monomial factors are packed as (mode << _SHIFT) | generator_index
_SHIFT = 6
_MASK = (1 << _SHIFT) - 1

_ONE = Fraction(1)


def depth_cap() -> int:
    """Maximum truncation depth; override with the environment variable."""
    raw = os.environ.get(DEPTH_CAP_ENV)
    if raw is None:
        return _DEFAULT_DEPTH_CAP
    try:
        cap = int(raw)
    except ValueError:
        raise ValueError("%s must be an integer, got %r" % (DEPTH_CAP_ENV, raw))
    if cap < 1:
        raise ValueError("%s must be >= 1, got %r" % (DEPTH_CAP_ENV, raw))
    return cap


def _acc(table, key, value):
    cur = table.get(key)
    if cur is None:
        table[key] = value
    else:
        cur = cur + value
        if cur:
            table[key] = cur
        else:
            del table[key]


def monomials_of_degree(dim_g: int, n: int, max_factor=None):
    """All packed monomials (k_1,p_1) >= ... with sum k_i = n, k_i >= 1."""
    if n == 0:
        return [()]
    out = []
    if max_factor is None:
        max_factor = (n << _SHIFT) | (dim_g - 1)
    top_mode = min(n, max_factor >> _SHIFT)
    for k in range(top_mode, 0, -1):
        p_top = (max_factor & _MASK) if k == (max_factor >> _SHIFT) else dim_g - 1
        for p in range(p_top, -1, -1):
            f = (k << _SHIFT) | p
            for rest in monomials_of_degree(dim_g, n - k, f):
                out.append((f,) + rest)
    return out


def _unpack(mono):
    return [((f >> _SHIFT), (f & _MASK)) for f in mono]


class TruncatedWeylModule:
    """Degrees 0..depth of Ind(M)_kappa with exact straightening.

    Immutable after construction; the straightening memos behave as pure
    caches.  Use build_truncated to construct.
    """

    def __init__(self, algebra, m_hw: Weight, kappa, depth: int):
        self.algebra = algebra
        self.m_hw = m_hw
        self.kappa = kappa
        self.depth = depth
        self.cb = chevalley_basis(algebra)
        self.rep = rep_from_hw(self.cb, m_hw)
        self.k_scalar = kappa - algebra.dual_coxeter
        self._opmemo = {}
        self._lmmemo = {}

        sym_dims = sym_ad_graded(algebra, depth).dims()
        keys = []
        bounds = [0]
        for n in range(depth + 1):
            monos = sorted(monomials_of_degree(self.cb.dim, n))
            assert len(monos) == sym_dims[n], "PBW layer does not match S(ad)"
            for mono in monos:
                for j in range(self.rep.dim):
                    keys.append((mono, j))
            bounds.append(len(keys))
        self.keys = tuple(keys)
        self._bounds = tuple(bounds)
        self.index = {key: i for i, key in enumerate(keys)}
        weights = []
        for mono, j in keys:
            w = self.rep.basis_weights[j]
            for f in mono:
                w = w + self.cb.weights[f & _MASK]
            weights.append(w)
        self.weights = tuple(weights)

    # -- layout --------------------------------------------------------------

    @property
    def dim(self) -> int:
        return len(self.keys)

    def degree_range(self, n: int) -> range:
        if not 0 <= n <= self.depth:
            raise ValueError("degree %d outside truncation 0..%d" % (n, self.depth))
        return range(self._bounds[n], self._bounds[n + 1])

    def degree_dim(self, n: int) -> int:
        return len(self.degree_range(n))

    @property
    def degree_index(self):
        return {n: self.degree_range(n) for n in range(self.depth + 1)}

    def degree_of(self, index: int) -> int:
        mono, _ = self.keys[index]
        return sum(f >> _SHIFT for f in mono)

    # -- straightening core ----------------------------------------------------

    def _leftmul(self, f, mono):
        """x_p eps^{-k} times a PBW monomial, as {monomial: coeff}."""
        key = (f, mono)
        hit = self._lmmemo.get(key)
        if hit is not None:
            return hit
        if not mono or f >= mono[0]:
            out = {(f,) + mono: _ONE}
        else:
            g, rest = mono[0], mono[1:]
            out = {}
            for m2, c in self._leftmul(f, rest).items():
                for m3, c3 in self._leftmul(g, m2).items():
                    _acc(out, m3, c * c3)
            # [x_f, x_g] eps^{-(k_f + k_g)}; no cocycle term between
            # two negative modes
            combined = ((f >> _SHIFT) + (g >> _SHIFT)) << _SHIFT
            for q, cq in self.cb.bracket_list(f & _MASK, g & _MASK):
                for m3, c3 in self._leftmul(combined | q, rest).items():
                    _acc(out, m3, cq * c3)
        self._lmmemo[key] = out
        return out

    def _op(self, p, m, mono):
        """x_p eps^m on mono (x) -, with the M tensor slot left symbolic.

        Returns {(monomial, tag): coeff} where tag None means the identity on
        M and tag q means a single factor x_q acting on M.
        """
        key = (p, m, mono)
        hit = self._opmemo.get(key)
        if hit is not None:
            return hit
        if not mono:
            if m > 0:
                out = {}
            elif m == 0:
                out = {((), p): _ONE}
            else:
                out = {((((-m) << _SHIFT) | p,), None): _ONE}
        else:
            g, rest = mono[0], mono[1:]
            k0, p0 = g >> _SHIFT, g & _MASK
            out = {}
            for (m2, tag), c in self._op(p, m, rest).items():
                for m3, c3 in self._leftmul(g, m2).items():
                    _acc(out, (m3, tag), c * c3)
            for q, cq in self.cb.bracket_list(p, p0):
                for (m3, tag), c3 in self._op(q, m - k0, rest).items():
                    _acc(out, (m3, tag), cq * c3)
            if m == k0:
                pr = self.cb.pairing(p, p0)
                if pr:
                    _acc(out, (rest, None), m * pr * self.k_scalar)
        self._opmemo[key] = out
        return out

    def apply_generator(self, p, m: int, index: int) -> dict:
        """x_p eps^m on basis vector #index, as {target index: coeff}."""
        mono, j = self.keys[index]
        target = sum(f >> _SHIFT for f in mono) - m
        if target > self.depth:
            raise ValueError(
                "image of degree %d under mode %d leaves the truncation"
                % (target + m, m)
            )
        out = {}
        if target < 0:
            return out
        mats = self.rep.mats
        for (m2, tag), c in self._op(p, m, mono).items():
            if tag is None:
                _acc(out, self.index[(m2, j)], c)
            else:
                col = mats[tag]
                for i in range(self.rep.dim):
                    v = col[i][j]
                    if v:
                        _acc(out, self.index[(m2, i)], c * v)
        return out

    def apply_to_vector(self, p, m: int, vec: dict) -> dict:
        out = {}
        for idx, c in vec.items():
            for t, v in self.apply_generator(p, m, idx).items():
                _acc(out, t, c * v)
        return out

    def generator_index(self, x) -> int:
        if isinstance(x, int):
            if not 0 <= x < self.cb.dim:
                raise ValueError("generator index %d out of range" % x)
            return x
        if x in self.cb.index:
            return self.cb.index[x]
        raise ValueError("unknown generator %r" % (x,))


def build_truncated(algebra, m_hw: Weight, kappa, depth: int) -> TruncatedWeylModule:
    """Construct the truncation of Ind(M)_kappa down to the given depth.

    Restricted to sl2 and sl3 (the straightening cost grows quickly with the
    number of positive roots).  kappa may be any nonzero rational or
    complex-rational scalar; kappa = 0 is the critical level where the
    Sugawara normalization fails.
    """
    if (algebra.series, algebra.rank) not in (("A", 1), ("A", 2)):
        raise ValueError("explicit construction supports A1 and A2 only")
    if not isinstance(depth, int) or depth < 1:
        raise ValueError("depth must be a positive integer")
    cap = depth_cap()
    if depth > cap:
        raise ValueError(
            "depth %d exceeds the cap %d (override with %s)"
            % (depth, cap, DEPTH_CAP_ENV)
        )
    if isinstance(kappa, int):
        kappa = Fraction(kappa)
    if isinstance(kappa, ComplexRational) and kappa.is_real():
        kappa = kappa.as_fraction()
    if not isinstance(kappa, (Fraction, ComplexRational)):
        raise ValueError("kappa must be rational or complex rational")
    if not kappa:
        raise ValueError("kappa = 0 is the critical level; rejected")
    if m_hw.algebra != algebra:
        raise ValueError("highest weight belongs to a different algebra")
    if not (m_hw.is_integral() and m_hw.is_dominant()):
        raise ValueError("M must have a dominant integral highest weight")
    return TruncatedWeylModule(algebra, m_hw, kappa, depth)


class ActionMatrix:
    """Degree-graded exact matrix of x eps^m (or of K when generator = "K").

    block(n) maps coordinates of degree n to coordinates of degree n - m.
    Source degrees whose image would exceed the truncation are omitted and
    the matrix is marked partial.
    """

    def __init__(self, module, generator, mode, blocks, source_degrees, partial):
        self.module = module
        self.generator = generator
        self.mode = mode
        self._blocks = blocks
        self.source_degrees = tuple(source_degrees)
        self.partial = partial

    def block(self, n: int):
        if n not in self._blocks:
            raise ValueError(
                "mode %d is not defined on degree %d within depth %d"
                % (self.mode, n, self.module.depth)
            )
        return self._blocks[n]

    def sparse_block(self, n: int) -> dict:
        """{(row, col): coeff} for the degree-n block."""
        mat = self.block(n)
        out = {}
        for i, row in enumerate(mat):
            for j, v in enumerate(row):
                if v:
                    out[(i, j)] = v
        return out


def act(module: TruncatedWeylModule, x, m: int) -> ActionMatrix:
    """Exact matrix of x eps^m, degree block by degree block.

    x is a Chevalley generator (name or index) or "K" for the central
    element, which acts by (kappa - h_dual) id in every degree (mode 0).
    """
    if x == "K":
        if m != 0:
            raise ValueError("K carries no modes")
        blocks = {}
        for n in range(module.depth + 1):
            d = module.degree_dim(n)
            blocks[n] = [
                [module.k_scalar if i == j else Fraction(0) for j in range(d)]
                for i in range(d)
            ]
        return ActionMatrix(module, "K", 0, blocks, range(module.depth + 1), False)
    if not isinstance(m, int) or abs(m) > module.depth:
        raise ValueError("mode must be an integer with |m| <= depth")
    p = module.generator_index(x)
    blocks = {}
    degrees = []
    partial = False
    for n in range(module.depth + 1):
        t = n - m
        if t < 0:
            # image vanishes identically; record the zero block
            blocks[n] = [[] for _ in range(0)]
            degrees.append(n)
            continue
        if t > module.depth:
            partial = True
            continue
        rows = module.degree_dim(t)
        cols = module.degree_dim(n)
        src = module.degree_range(n).start
        tgt = module.degree_range(t).start
        mat = [[Fraction(0)] * cols for _ in range(rows)]
        for c in range(cols):
            for idx, v in module.apply_generator(p, m, src + c).items():
                mat[idx - tgt][c] = v
        blocks[n] = mat
        degrees.append(n)
    return ActionMatrix(module, module.cb.names[p], m, blocks, degrees, partial)


class L0Matrix:
    """Block-diagonal Sugawara L0, computed from the normally-ordered sum."""

    def __init__(self, module, blocks, eigenvalues):
        self.module = module
        self._blocks = blocks
        self._eigenvalues = eigenvalues

    def block(self, n: int):
        if n not in self._blocks:
            raise ValueError("degree %d outside truncation" % n)
        return self._blocks[n]

    def eigenvalue(self, n: int):
        if n not in self._eigenvalues:
            raise ValueError("degree %d outside truncation" % n)
        return self._eigenvalues[n]

    def is_scalar_by_degree(self) -> bool:
        for n, mat in self._blocks.items():
            xi = self._eigenvalues[n]
            for i, row in enumerate(mat):
                for j, v in enumerate(row):
                    if v != (xi if i == j else 0):
                        return False
        return True


def sugawara_l0(module: TruncatedWeylModule) -> L0Matrix:
    """The zero Sugawara mode, evaluated literally and exactly.

    L0 = (1/kappa) sum_p [ x_p x^p / 2 + sum_{j>=1} (x_p eps^{-j})(x^p eps^j) ]
    with {x_p}, {x^p} dual bases of g under the normalized form, written in
    normal order (positive modes to the right).  The result is asserted to be
    the scalar a/(2 kappa) + n on each degree-n layer, a = Casimir of M.
    """
    kappa = module.kappa
    a = casimir_on_irrep(module.algebra, module.m_hw)
    pairs = module.cb.casimir_pairs
    blocks = {}
    eigenvalues = {}
    for n in range(module.depth + 1):
        rng = module.degree_range(n)
        d = len(rng)
        xi = top_l0_eigenvalue(a, kappa) + n
        mat = [[Fraction(0)] * d for _ in range(d)]
        for c, idx in enumerate(rng):
            acc = {}
            start = {idx: _ONE}
            for (p, q, w) in pairs:
                tmp = module.apply_to_vector(q, 0, start)
                tmp = module.apply_to_vector(p, 0, tmp)
                for t, v in tmp.items():
                    _acc(acc, t, w * v / 2)
            for j in range(1, n + 1):
                for (p, q, w) in pairs:
                    tmp = module.apply_to_vector(q, j, start)
                    if not tmp:
                        continue
                    tmp = module.apply_to_vector(p, -j, tmp)
                    for t, v in tmp.items():
                        _acc(acc, t, w * v)
            for t, v in acc.items():
                mat[t - rng.start][c] = v / kappa
            expected = {idx: xi} if xi else {}
            assert {t: v / kappa for t, v in acc.items()} == expected, (
                "Sugawara sum is not the expected scalar at degree %d" % n
            )
        blocks[n] = mat
        eigenvalues[n] = xi
    return L0Matrix(module, blocks, eigenvalues)


def virasoro_commutation_check(module: TruncatedWeylModule, max_mode=None) -> bool:
    """Exact check of [L0, x eps^m] = -m (x eps^m) on the valid window.

    Runs over every Chevalley generator and every mode |m| <= max_mode
    (default: the full depth), comparing matrix products of the literally
    computed L0 with the action blocks.  The products are evaluated column
    by column over the nonzero entries, so the cost scales with the sparsity
    of the action rather than with dense block size.
    """
    l0 = sugawara_l0(module)
    l0_cols = {}
    for n in range(module.depth + 1):
        block = l0.block(n)
        cols = {}
        for i, row in enumerate(block):
            for j, v in enumerate(row):
                if v:
                    cols.setdefault(j, {})[i] = v
        l0_cols[n] = cols
    top = module.depth if max_mode is None else max_mode
    for p in range(module.cb.dim):
        name = module.cb.names[p]
        for m in range(-top, top + 1):
            mat = act(module, name, m)
            for n in mat.source_degrees:
                t = n - m
                if t < 0:
                    continue
                a_cols = {}
                for (i, j), v in mat.sparse_block(n).items():
                    a_cols.setdefault(j, {})[i] = v
                for j in range(module.degree_dim(n)):
                    aj = a_cols.get(j, {})
                    lhs = {}
                    for k, av in aj.items():
                        for i, lv in l0_cols[t].get(k, {}).items():
                            _acc(lhs, i, lv * av)
                    for k, rv in l0_cols[n].get(j, {}).items():
                        for i, av in a_cols.get(k, {}).items():
                            _acc(lhs, i, -av * rv)
                    rhs = {} if m == 0 else {i: -m * v for i, v in aj.items()}
                    if lhs != rhs:
                        return False
    return True


class SingularVectorReport:
    """Exact kernel of the raising modes inside one weight space of a layer."""

    __slots__ = ("degree", "weight", "basis_of_solutions", "matched_candidate")

    def __init__(self, degree, weight, basis_of_solutions, matched_candidate):
        self.degree = degree
        self.weight = weight
        self.basis_of_solutions = tuple(basis_of_solutions)
        self.matched_candidate = matched_candidate

    def __repr__(self):
        return (
            "SingularVectorReport(degree=%d, weight=%r, solutions=%d, "
            "matched=%r)" % (
                self.degree,
                self.weight,
                len(self.basis_of_solutions),
                self.matched_candidate,
            )
        )


def _nullspace_of_columns(columns, n_rows_hint=None):
    """Kernel of the map sending unit column c to the sparse vector columns[c].

    columns is a list of {row_key: coeff}.  Returns normalized kernel vectors
    as coefficient lists over the columns.
    """
    row_keys = sorted({k for col in columns for k in col})
    row_pos = {k: i for i, k in enumerate(row_keys)}
    rows = [[Fraction(0)] * len(columns) for _ in row_keys]
    for c, col in enumerate(columns):
        for k, v in col.items():
            rows[row_pos[k]][c] = v
    return nullspace(rows, len(columns))


def _weight_blocks(module, indices):
    blocks = {}
    for idx in indices:
        blocks.setdefault(module.weights[idx].coords, []).append(idx)
    return blocks


def singular_vectors(module: TruncatedWeylModule, n: int):
    """Vectors of degree n killed by every x eps (hence by all of eps g[eps]).

    The kernel is solved exactly inside each weight space of the layer; one
    report is returned per weight carrying solutions, with the matching
    resonance candidate attached when the candidate machinery applies to
    kappa (outside the nonnegative reals).
    """
    if not 1 <= n <= module.depth:
        raise ValueError("degree must satisfy 1 <= n <= depth")
    lam = module.m_hw + module.algebra.rho
    matchable = []
    if scalar_im(module.kappa) != 0 or scalar_re(module.kappa) < 0:
        matchable = [p for p in candidate_pairs(lam, module.kappa, n) if p.n == n]
    reports = []
    blocks = _weight_blocks(module, module.degree_range(n))
    for wt_coords in sorted(blocks):
        block = blocks[wt_coords]
        columns = []
        for idx in block:
            col = {}
            for p in range(module.cb.dim):
                for t, v in module.apply_generator(p, 1, idx).items():
                    col[(p, t)] = v
            columns.append(col)
        kernel = _nullspace_of_columns(columns)
        if not kernel:
            continue
        weight = module.algebra.weight(wt_coords)
        solutions = []
        for vec in kernel:
            solutions.append(
                {block[i]: c for i, c in enumerate(vec) if c}
            )
        matched = None
        target = weight + module.algebra.rho
        for p in matchable:
            if lam + p.mu.to_weight() == target:
                matched = p
                break
        if matched is None:
            for p in matchable:
                if same_weyl_orbit(lam + p.mu.to_weight(), target):
                    matched = p
                    break
        reports.append(SingularVectorReport(n, weight, solutions, matched))
    return reports


class AnnihilatorSubspace:
    """Exact basis of V(order): vectors killed by all monomials in the
    positive modes of loop degree >= order, reported on degrees <= window."""

    __slots__ = ("module", "order", "window", "vectors", "dims_by_degree")

    def __init__(self, module, order, window, vectors):
        self.module = module
        self.order = order
        self.window = window
        self.vectors = tuple(vectors)
        dims = {}
        for d, _ in vectors:
            dims[d] = dims.get(d, 0) + 1
        self.dims_by_degree = dims

    @property
    def dimension(self) -> int:
        return len(self.vectors)

    def span_contains(self, degree: int, vec: dict) -> bool:
        span = SpanBuilder(self.module.dim)
        for d, v in self.vectors:
            if d == degree:
                span.add(v)
        return span.contains(vec)

    def __repr__(self):
        return "AnnihilatorSubspace(order=%d, window=%d, dims=%r)" % (
            self.order,
            self.window,
            self.dims_by_degree,
        )


def annihilator_level(module: TruncatedWeylModule, order: int) -> AnnihilatorSubspace:
    """V(order) within the truncation, degrees 0..depth-order.

    A degree-d vector lies in V(order) iff it is killed by every PBW monomial
    in the raising modes of total loop degree e with order <= e <= d; larger e
    lowers past degree zero and acts by zero automatically, and degrees
    d < order are contained entirely.
    """
    if order < 1:
        raise ValueError("annihilator order must be >= 1")
    if module.depth < order:
        raise ValueError(
            "window too small: computing V(%d) requires depth >= %d"
            % (order, order)
        )
    window = module.depth - order
    vectors = []
    for d in range(window + 1):
        rng = module.degree_range(d)
        if d < order:
            for idx in rng:
                vectors.append((d, {idx: _ONE}))
            continue
        ops = []
        for e in range(order, d + 1):
            ops.extend(monomials_of_degree(module.cb.dim, e))
        blocks = _weight_blocks(module, rng)
        for wt_coords in sorted(blocks):
            block = blocks[wt_coords]
            columns = []
            for idx in block:
                col = {}
                for o_num, op in enumerate(ops):
                    vec = {idx: _ONE}
                    for f in reversed(op):
                        vec = module.apply_to_vector(f & _MASK, f >> _SHIFT, vec)
                        if not vec:
                            break
                    for t, v in vec.items():
                        col[(o_num, t)] = v
                columns.append(col)
            kernel = _nullspace_of_columns(columns)
            for vec in kernel:
                vectors.append(
                    (d, {block[i]: c for i, c in enumerate(vec) if c})
                )
    return AnnihilatorSubspace(module, order, window, vectors)


def check_kl_exact_sequence(module: TruncatedWeylModule, order: int):
    """Verify exactness of 0 -> V(1) -> V(order) -> Hom(g, V(order-1)).

    The middle map is i(v)(x) = (x eps) v.  Checks, all exactly and within
    the degree window of V(order): the kernel of i equals V(1), i lands in
    V(order-1) componentwise, i is a g-map for the adjoint-twisted action on
    Hom, and V(order) is g-stable.  Returns (ok, diagnostics).
    """
    if order < 1:
        raise ValueError("annihilator order must be >= 1")
    if module.depth < order:
        raise ValueError(
            "window too small: need depth >= %d for V(%d)" % (order, order)
        )
    v_top = annihilator_level(module, order)
    v_one = annihilator_level(module, 1)
    window = v_top.window

    basis = v_top.vectors
    # kernel of i inside V(order), solved in V(order) coordinates
    columns = []
    for _, vec in basis:
        col = {}
        for p in range(module.cb.dim):
            for t, v in module.apply_to_vector(p, 1, vec).items():
                col[(p, t)] = v
        columns.append(col)
    kernel = _nullspace_of_columns(columns)
    kernel_vectors = []
    for combo in kernel:
        acc = {}
        for i, c in enumerate(combo):
            if c:
                for t, v in basis[i][1].items():
                    _acc(acc, t, c * v)
        kernel_vectors.append(acc)

    v_one_window = [(d, v) for (d, v) in v_one.vectors if d <= window]
    span_v1 = SpanBuilder(module.dim)
    for _, v in v_one_window:
        span_v1.add(v)
    kernel_span = SpanBuilder(module.dim)
    kernel_inside = True
    for v in kernel_vectors:
        kernel_span.add(v)
        if not span_v1.contains(v):
            kernel_inside = False
    kernel_matches = kernel_inside and kernel_span.rank() == span_v1.rank()

    # i lands in V(order-1) when order >= 2 (for order = 1 the map is zero)
    lands = True
    if order >= 2:
        v_prev = annihilator_level(module, order - 1)
        for d, vec in basis:
            for p in range(module.cb.dim):
                img = module.apply_to_vector(p, 1, vec)
                if img and not v_prev.span_contains(d - 1, img):
                    lands = False
    else:
        for _, vec in basis:
            for p in range(module.cb.dim):
                if module.apply_to_vector(p, 1, vec):
                    lands = False

    # equivariance: (x eps)(y v) = y ((x eps) v) + ([x, y] eps) v
    equivariant = True
    for d, vec in basis:
        for y in range(module.cb.dim):
            yv = module.apply_to_vector(y, 0, vec)
            for x in range(module.cb.dim):
                lhs = module.apply_to_vector(x, 1, yv)
                rhs = module.apply_to_vector(y, 0, module.apply_to_vector(x, 1, vec))
                for q, cq in module.cb.bracket_list(x, y):
                    for t, v in module.apply_to_vector(q, 1, vec).items():
                        _acc(rhs, t, cq * v)
                if lhs != rhs:
                    equivariant = False

    # g-stability of V(order) degree by degree
    stable = True
    for d, vec in basis:
        for y in range(module.cb.dim):
            img = module.apply_to_vector(y, 0, vec)
            if img and not v_top.span_contains(d, img):
                stable = False

    diagnostics = {
        "window": window,
        "dim_V1": len(v_one_window),
        "dim_Vorder": len(basis),
        "dim_kernel": len(kernel_vectors),
        "kernel_equals_V1": kernel_matches,
        "image_in_Vprev": lands,
        "equivariant": equivariant,
        "g_stable": stable,
    }
    ok = kernel_matches and lands and equivariant and stable
    return ok, diagnostics


def _format_entry(value):
    return format_scalar(value)


def module_json_dict(module: TruncatedWeylModule, modes=None) -> dict:
    """Serializable snapshot of the truncated module.

    Schema (all scalars are exact strings, "p/q" or "a/b+c/d i"):
      schema: fixed identifier string
      algebra: {series, rank}
      m_hw / kappa / depth / dual_coxeter / k_scalar: build parameters
      generators: Chevalley generator names in index order
      degrees: per degree, the basis as {factors: [[mode, generator], ...],
               m_index} with factor modes positive (eps^{-mode})
      actions: per generator and mode, blocks of exact entries
               [row, col, value] sorted by (row, col); partial marks modes
               whose image leaves the truncation on some degrees
    Modes default to every |m| <= depth.
    """
    if modes is None:
        modes = range(-module.depth, module.depth + 1)
    degrees = []
    for n in range(module.depth + 1):
        rng = module.degree_range(n)
        basis = []
        for idx in rng:
            mono, j = module.keys[idx]
            basis.append(
                {
                    "factors": [
                        [k, module.cb.names[p]] for (k, p) in _unpack(mono)
                    ],
                    "m_index": j,
                    "weight": [_format_entry(c) for c in module.weights[idx].coords],
                }
            )
        degrees.append({"degree": n, "dimension": len(rng), "basis": basis})
    actions = []
    for p in range(module.cb.dim):
        name = module.cb.names[p]
        for m in modes:
            mat = act(module, name, m)
            blocks = []
            for n in mat.source_degrees:
                t = n - m
                if t < 0:
                    continue
                entries = []
                block = mat.block(n)
                for i, row in enumerate(block):
                    for j, v in enumerate(row):
                        if v:
                            entries.append([i, j, _format_entry(v)])
                blocks.append(
                    {
                        "source_degree": n,
                        "target_degree": t,
                        "entries": entries,
                    }
                )
            actions.append(
                {
                    "generator": name,
                    "mode": m,
                    "partial": mat.partial,
                    "blocks": blocks,
                }
            )
    return {
        "schema": "weylmod.truncated_module.v1",
        "algebra": {"series": module.algebra.series, "rank": module.algebra.rank},
        "m_hw": [_format_entry(c) for c in module.m_hw.coords],
        "kappa": _format_entry(module.kappa),
        "depth": module.depth,
        "dual_coxeter": _format_entry(module.algebra.dual_coxeter),
        "k_scalar": _format_entry(module.k_scalar),
        "generators": list(module.cb.names),
        "degrees": degrees,
        "actions": actions,
    }
