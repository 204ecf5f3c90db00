"""
Lemma Registry
One verification per lemma identifier, each returning an Outcome
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable, Dict, List, Optional

import numpy as np

from ..catalog import (
    A2_ROTATION, NIEMEIER_TYPES, alpha_glue, beta_glue, doubly_even_classes,
    e8_a8_plus_three, e8_tetracode, ee8_sublattices, eee8, h_on_e8, k_sublattice_3C, l_beta,
    leech_with_h, m4_set, m_mprime_tower, m_phi, miyamoto_isometry, niemeier,
    phi_sign, q_group, q_std, r_group, r_std, root_lattice,
)
from ..cyclo import (
    check_b_inverse_p_b, check_bbt_permutation, check_diagonal_form, check_shift_conjugation,
    check_torus_exponents, eigenvalue_exponents,
)
from ..exactla import RatMat
from ..glue import (
    DiscriminantAutomorphism, fixed_space_mod3, glue_of_overlattice, glue_overlattice_with_handles,
    random_valid_glue, twist,
)
from ..lattice import (
    Isometry, annihilator, fixed_sublattice, index, is_primitive, isometric, reflection,
    restrict_isometry, scale, sublattice, sum_of, trace,
)
from ..permgrp import CommonStabilizerReport, common_stabilizer_report
from ..shortvec import format_root_type, minimum, root_count, root_system_type, short_vectors

logger = logging.getLogger(__name__)

LEECH_NORM4_COUNT = 196560
STABILIZER_ORDER = 2177280
STABILIZER_DERIVED_ORDER = 362880
ROOT_STABILIZER_ORDER = 1512
ROOT_STABILIZER_DERIVED_ORDER = 504
O_R_ORDER = 696729600


class UnknownLemmaError(KeyError):
    """No verification is registered under the given identifier"""


@dataclass
class Outcome:
    passed: bool
    metrics: Dict[str, Any]
    witness: Any = None
    unresolved: bool = False


@dataclass
class VerificationContext:
    """Seeds, budgets and the expensive objects shared between lemmas"""
    seed: int = 0
    budget_seconds: Optional[float] = None
    progress: bool = False
    settings: Dict[str, Any] = field(default_factory=dict)
    _report: Optional[CommonStabilizerReport] = field(default=None, repr=False)

    def setting(self, key: str, default: Any) -> Any:
        value = self.settings.get(key)
        return default if value is None else value

    def stabilizer_report(self) -> CommonStabilizerReport:
        if self._report is None:
            logger.info("computing the common stabilizer of α and β (seed %d)", self.seed)
            self._report = common_stabilizer_report(
                root_lattice("A", 2), root_lattice("E", 8), q_std(), r_std(),
                alpha_glue(), beta_glue(self.seed, self.budget_seconds))
        return self._report


@dataclass(frozen=True)
class Lemma:
    lemma_id: str
    check: Callable[[VerificationContext], Outcome]
    randomized: bool = False
    slow: bool = False


LEMMAS: Dict[str, Lemma] = {}


def lemma(lemma_id: str, randomized: bool = False, slow: bool = False):
    def register(func: Callable[[VerificationContext], Outcome]):
        if lemma_id in LEMMAS:
            raise ValueError(f"lemma {lemma_id} registered twice")
        LEMMAS[lemma_id] = Lemma(lemma_id, func, randomized, slow)
        return func
    return register


def lemma_ids() -> List[str]:
    return list(LEMMAS)


def get_lemma(lemma_id: str) -> Lemma:
    try:
        return LEMMAS[lemma_id]
    except KeyError:
        raise UnknownLemmaError(f"unknown lemma id {lemma_id!r}") from None


def _witness_matrix(t: Optional[Isometry]) -> Optional[List[List[str]]]:
    return None if t is None else t.matrix.to_strings()


# --- the M, M′ tower -------------------------------------------------------

@lemma("lem-2.2")
def tower_rootless(ctx: VerificationContext) -> Outcome:
    tower = m_mprime_tower()
    roots = root_count(tower.q.lattice)
    metrics = {
        'root_count': roots,
        'rank_m': tower.m.rank,
        'rank_m_prime': tower.m_prime.rank,
        'rank_sum': tower.q.rank,
        'intersection_zero': tower.q.rank == tower.m.rank + tower.m_prime.rank,
    }
    return Outcome(roots == 0 and metrics['intersection_zero'], metrics)


@lemma("lem-2.3")
def tower_is_a2_e8(ctx: VerificationContext) -> Outcome:
    tower = m_mprime_tower()
    t = isometric(tower.q.lattice, q_std(), budget_seconds=ctx.budget_seconds)
    metrics = {'q_iso': t is not None, 'determinant': tower.q.lattice.determinant}
    if t is None:
        return Outcome(False, metrics, witness={'gram': tower.q.lattice.gram.to_strings()})
    return Outcome(True, metrics, witness={'isometry': _witness_matrix(t)})


# --- Q ⊥ R inside the Leech lattice -----------------------------------------

@lemma("thm-embed", randomized=True, slow=True)
def leech_embedding(ctx: VerificationContext) -> Outcome:
    lattice, h = leech_with_h(ctx.seed)
    r_l = fixed_sublattice(lattice, h, name="R_L")
    q_l = annihilator(lattice, r_l, name="Q_L")
    t_r = isometric(r_std(), r_l.lattice, budget_seconds=ctx.budget_seconds)
    t_q = isometric(q_std(), q_l.lattice, budget_seconds=ctx.budget_seconds)
    glue_index = index(sum_of(lattice, q_l, r_l, name="Q_L+R_L"))
    metrics = {
        'r_rank': r_l.rank,
        'q_rank': q_l.rank,
        'r_iso': t_r is not None,
        'q_iso': t_q is not None,
        'index': glue_index,
        'h_trace': trace(h),
    }
    if t_r is None or t_q is None:
        logger.warning("Leech decomposition failed (R %s, Q %s)", metrics['r_iso'], metrics['q_iso'])
    ok = metrics['r_iso'] and metrics['q_iso'] and glue_index == 3 ** 8 and r_l.rank == 8
    return Outcome(ok, metrics)


@lemma("prop-x1", randomized=True, slow=True)
def glue_round_trip(ctx: VerificationContext) -> Outcome:
    samples = int(ctx.setting('roundtrip_samples', 50))
    failures = []
    for i in range(samples):
        s = ctx.seed + i
        glue = random_valid_glue(q_group(), r_group(), s)
        lattice, hq, hr = glue_overlattice_with_handles(q_std(), r_std(), glue, name=f"L[{s}]")
        if not (lattice.is_even and lattice.is_unimodular):
            failures.append({'seed': s, 'reason': 'not even unimodular'})
            continue
        if glue_of_overlattice(lattice, hq, hr, q_group(), r_group()) != glue:
            failures.append({'seed': s, 'reason': 'glue not recovered'})
    metrics = {'samples': samples, 'even_unimodular_round_trips': samples - len(failures)}
    return Outcome(not failures, metrics, witness=failures or None)


@lemma("lem-minvec")
def a2_e8_minimal_vectors(ctx: VerificationContext) -> Outcome:
    q = q_std()
    found = m4_set(q)
    classes = doubly_even_classes(q)
    gi, _ = q.integer_gram
    within = all(((c @ gi @ c.T) % 2 == 0).all() for c in classes)
    # maximal: every vector outside a class pairs oddly with some member
    maximal = all(
        ((other @ gi @ c.T) % 2 == 1).any(axis=1).all()
        for i, c in enumerate(classes) for j, other in enumerate(classes) if i != j
    )
    sizes = sorted(len(c) for c in classes)
    metrics = {
        'minimum': minimum(q),
        'min_vectors': found.count,
        'classes': len(classes),
        'class_sizes': sizes,
        'doubly_even': within,
        'maximal': maximal,
    }
    ok = metrics['minimum'] == 4 and found.count == 720 and sizes == [240] * 3 and within and maximal
    return Outcome(ok, metrics)


@lemma("lem-trivmodp", randomized=True)
def h_nontrivial_mod_3(ctx: VerificationContext) -> Outcome:
    metrics = {}
    for label, h in (("e8", h_on_e8()), ("leech", leech_with_h(ctx.seed)[1])):
        ident = [[int(i == j) for j in range(h.lattice.rank)] for i in range(h.lattice.rank)]
        metrics[f'{label}_mod3_identity'] = h.mod(3) == ident
        metrics[f'{label}_order'] = h.order
    ok = not (metrics['e8_mod3_identity'] or metrics['leech_mod3_identity']) \
        and metrics['e8_order'] == 3 and metrics['leech_order'] == 3
    return Outcome(ok, metrics)


# --- stabilizers of α and β -------------------------------------------------

def _a2_sign_group() -> List[RatMat]:
    """W(A2) × {±1} on A2 in the simple-root basis"""
    a2 = root_lattice("A", 2)
    gens = [reflection(a2, (1, 0)).matrix, reflection(a2, (0, 1)).matrix, -RatMat.identity(2)]
    found = {RatMat.identity(2)}
    frontier = list(found)
    while frontier:
        nxt = []
        for m in frontier:
            for g in gens:
                p = m @ g
                if p not in found:
                    found.add(p)
                    nxt.append(p)
        frontier = nxt
    return sorted(found, key=lambda m: m.to_strings())


@lemma("lem-stab0-membership", randomized=True, slow=True)
def a2_side_stabilizers(ctx: VerificationContext) -> Outcome:
    q, dq = q_std(), q_group()
    ident_e8 = RatMat.identity(8)
    elements = _a2_sign_group()
    glues = {'alpha': alpha_glue(), 'beta': beta_glue(ctx.seed, ctx.budget_seconds)}
    autos = [dq.automorphism(Isometry(q, RatMat.kron(m, ident_e8))) for m in elements]
    rotation = dq.automorphism(Isometry(q, RatMat.kron(A2_ROTATION, ident_e8)))
    metrics: Dict[str, Any] = {'group_order': len(elements)}
    ok = len(elements) == 12
    for name, glue in glues.items():
        count = sum(twist(glue, g) == glue for g in autos)
        metrics[f'{name}_stabilizer_order'] = count
        metrics[f'{name}_rotation_stabilizes'] = twist(glue, rotation) == glue
        ok = ok and count == 6 and metrics[f'{name}_rotation_stabilizes']
    return Outcome(ok, metrics)


@lemma("prop-stab1-membership", randomized=True, slow=True)
def sigma_stabilizes_glue(ctx: VerificationContext) -> Outcome:
    metrics: Dict[str, Any] = {}
    failed = []
    for type_name in NIEMEIER_TYPES:
        emb = niemeier(type_name, ctx.seed)
        glue = glue_of_overlattice(emb.niemeier, emb.q_handle, emb.r_handle)
        dq, dr = glue.source, glue.target
        gq = dq.automorphism(restrict_isometry(emb.sigma, emb.q_handle))
        gr = dr.automorphism(restrict_isometry(emb.sigma, emb.r_handle))
        by_sigma = twist(glue, gq, gr) == glue
        by_minus = twist(glue, DiscriminantAutomorphism.scalar(dq, -1),
                         DiscriminantAutomorphism.scalar(dr, -1)) == glue
        metrics[type_name] = {'sigma': by_sigma, 'minus_one': by_minus, 'sigma_trivial_on_r': gr.is_identity()}
        if not (by_sigma and by_minus and gr.is_identity()):
            failed.append(type_name)
    return Outcome(not failed, metrics, witness=failed or None)


@lemma("lem-qr-e8cube", randomized=True)
def e8_cube_pieces(ctx: VerificationContext) -> Outcome:
    emb = niemeier("E8^3", ctx.seed)
    r_iso = isometric(emb.r_handle.lattice, r_std(), budget_seconds=ctx.budget_seconds) is not None
    q_iso = isometric(emb.q_handle.lattice, q_std(), budget_seconds=ctx.budget_seconds) is not None
    e8 = e8_tetracode().lattice
    moved = sublattice(e8, h_on_e8().matrix - RatMat.identity(8), name="(h-1)E8")
    shrunk = scale(moved.lattice, Fraction(1, 3))
    metrics = {
        'r_iso': r_iso,
        'q_iso': q_iso,
        'h_minus_1_det': moved.lattice.determinant,
        'h_minus_1_over_3_even_unimodular': shrunk.is_even and shrunk.is_unimodular,
    }
    ok = r_iso and q_iso and metrics['h_minus_1_det'] == 3 ** 8 \
        and metrics['h_minus_1_over_3_even_unimodular']
    return Outcome(ok, metrics)


def _weyl_word(rng: np.random.Generator, length: int) -> RatMat:
    """Product of random simple reflections of E8 (simple-root basis)"""
    e8 = root_lattice("E", 8)
    refl = [reflection(e8, tuple(int(i == j) for j in range(8))).matrix for i in range(8)]
    w = RatMat.identity(8)
    for k in rng.integers(0, 8, size=length):
        w = w @ refl[int(k)]
    return w


@lemma("nota-mphi", randomized=True)
def m_phi_is_e8_cube(ctx: VerificationContext) -> Outcome:
    rng = np.random.default_rng(ctx.seed)
    metrics: Dict[str, Any] = {}
    ok = True
    for label, phi in (("identity", None), ("weyl_word", _weyl_word(rng, 16))):
        lattice = m_phi(phi)
        roots = root_count(lattice)
        root_type = format_root_type(root_system_type(lattice))
        metrics[label] = {
            'even_unimodular': lattice.is_even and lattice.is_unimodular,
            'roots': roots,
            'root_type': root_type,
        }
        ok = ok and roots == 720 and root_type == "E8^3"
    return Outcome(ok, metrics)


@lemma("lem-ww-regular", randomized=True)
def weyl_twists_are_regular(ctx: VerificationContext) -> Outcome:
    samples = int(ctx.setting('ww_samples', 20))
    max_attempts = int(ctx.setting('ww_max_attempts', 10 * samples))
    rng = np.random.default_rng(ctx.seed)
    alpha, r = alpha_glue(), r_std()
    attempts = nontrivial = regular = 0
    while nontrivial < samples and attempts < max_attempts:
        attempts += 1
        w = _weyl_word(rng, int(rng.integers(1, 24)))
        gr = r_group().automorphism(Isometry(r, w))
        if gr.is_identity():
            continue
        nontrivial += 1
        regular += twist(alpha, None, gr) != alpha
    metrics = {'samples': samples, 'attempts': attempts, 'nontrivial_mod_3': nontrivial,
               'twist_differs': regular}
    if nontrivial < samples:
        # too few words act nontrivially mod 3 to decide
        return Outcome(False, metrics, unresolved=regular == nontrivial)
    return Outcome(regular == nontrivial, metrics)


# --- L(β) -------------------------------------------------------------------

@lemma("lem-lbeta-rootless", randomized=True, slow=True)
def l_beta_rootless(ctx: VerificationContext) -> Outcome:
    lattice = l_beta(ctx.seed, ctx.budget_seconds)
    found = short_vectors(lattice, 4, progress=ctx.progress)
    counts = found.norm_counts()
    metrics = {
        'even': lattice.is_even,
        'unimodular': lattice.is_unimodular,
        'root_count': counts.get(Fraction(2), 0),
        'norm4_count': counts.get(Fraction(4), 0),
    }
    ok = metrics['even'] and metrics['unimodular'] and metrics['root_count'] == 0 \
        and metrics['norm4_count'] == LEECH_NORM4_COUNT
    return Outcome(ok, metrics)


@lemma("lem-lbeta-group", randomized=True, slow=True)
def l_beta_group(ctx: VerificationContext) -> Outcome:
    report = ctx.stabilizer_report()
    metrics = {
        'order': report.order,
        'derived_order': report.derived_subgroup_order,
        'root_stab': report.point_stabilizer_order,
        'o_r_order': report.o_r_order,
        'kernel_order': report.kernel_order,
        'set_orbit_length': report.set_orbit_length,
        'odd_element_stabilizes_alpha': report.odd_element_stabilizes_alpha,
        'odd_element_stabilizes_beta': report.odd_element_stabilizes_beta,
        'odd_twist_root_count': report.odd_twist_root_count,
        'generators_verified': report.generators_verified,
    }
    ok = (report.order == STABILIZER_ORDER
          and report.derived_subgroup_order == STABILIZER_DERIVED_ORDER
          and report.point_stabilizer_order == ROOT_STABILIZER_ORDER
          and report.o_r_order == O_R_ORDER
          and report.odd_element_stabilizes_alpha
          and not report.odd_element_stabilizes_beta
          and report.odd_twist_root_count == 720
          and report.generators_verified)
    return Outcome(ok, metrics, witness=None if ok else report.to_dict())


@lemma("lem-htrans-orbit", randomized=True, slow=True)
def derived_group_transitive(ctx: VerificationContext) -> Outcome:
    report = ctx.stabilizer_report()
    metrics = {
        'orbit_lengths': report.orbit_lengths,
        'point_stabilizer_order': report.point_stabilizer_order,
        'point_stabilizer_derived_order': report.point_stabilizer_derived_order,
        'center_order': report.center_order,
    }
    ok = (report.orbit_lengths == [240]
          and report.point_stabilizer_order == ROOT_STABILIZER_ORDER
          and report.point_stabilizer_derived_order == ROOT_STABILIZER_DERIVED_ORDER)
    return Outcome(ok, metrics)


@lemma("nota-a8mod3")
def a8_fixed_space_mod_3(ctx: VerificationContext) -> Outcome:
    model = e8_a8_plus_three()
    gens = [reflection(model.lattice, row) for row in model.sub.rows.to_ints()]
    found = fixed_space_mod3(gens)
    metrics = {
        'fixed_dim': found.dim,
        'fixed_nonsingular': found.nonsingular,
        'complement_dim': found.complement_dim,
        'complement_nonsingular': found.complement_nonsingular,
    }
    ok = found.dim == 1 and found.nonsingular and found.complement_dim == 7 \
        and found.complement_nonsingular
    return Outcome(ok, metrics, witness=None if ok else found.basis)


# --- Niemeier table ---------------------------------------------------------

def _niemeier_check(type_name: str) -> Callable[[VerificationContext], Outcome]:
    def check(ctx: VerificationContext) -> Outcome:
        emb = niemeier(type_name, ctx.seed)
        n = emb.niemeier
        budget = ctx.budget_seconds
        r_iso = isometric(emb.r_handle.lattice, eee8(), budget_seconds=budget) is not None
        q_iso = isometric(emb.q_handle.lattice, q_std(), budget_seconds=budget) is not None
        ann_ok = ((emb.q_handle.rows @ n.gram @ emb.r_handle.rows.T).is_zero()
                  and is_primitive(emb.q_handle)
                  and emb.q_handle.rank + emb.r_handle.rank == n.rank)
        roots = root_count(n)
        root_type = format_root_type(root_system_type(n))
        centralizer = emb.centralizer_order_expected
        metrics = {
            'even_unimodular': n.is_even and n.is_unimodular,
            'q_iso': q_iso,
            'r_iso': r_iso,
            'ann_ok': ann_ok,
            'roots': roots,
            'root_type': root_type,
            'printed_r_matches': emb.printed_r_matches,
            'printed_q_matches': emb.printed_q_matches,
            'centralizer': emb.centralizer_expression,
            'centralizer_order': "unresolved" if centralizer is None else centralizer,
            'notes': emb.notes,
        }
        ok = (metrics['even_unimodular'] and q_iso and r_iso and ann_ok
              and roots == emb.root_count_expected and root_type == type_name)
        return Outcome(ok, metrics)
    return check


def _niemeier_id(type_name: str) -> str:
    return "appc-" + type_name.replace("^", "_")


for _type in NIEMEIER_TYPES:
    lemma(_niemeier_id(_type), randomized=True, slow=True)(_niemeier_check(_type))


# --- 3C data ----------------------------------------------------------------

@lemma("eq-K-3C")
def k_in_m(ctx: VerificationContext) -> Outcome:
    data = k_sublattice_3C()
    beta_coords = data.m.lattice_coordinates(data.beta_vec)
    beta_pairing = 3 * data.pairing(data.beta_vec)
    metrics = {
        'index': index(data.k),
        'det_k': data.k.lattice.determinant,
        'gamma_norm': data.pairing(data.gamma_vec),
        'k_character_zero': all(data.character(r) == 0 for r in data.k.rows.to_ints()),
        'beta_character': data.character(beta_coords),
        'three_gamma_beta': beta_pairing,
    }
    ok = (metrics['index'] == 3 and metrics['det_k'] == 2 ** 8 * 9
          and metrics['gamma_norm'] == Fraction(16, 9) and metrics['k_character_zero']
          and beta_pairing.denominator == 1 and beta_pairing.numerator % 3 != 0)
    return Outcome(ok, metrics)


@lemma("eq-eE-support")
def m4_sign_support(ctx: VerificationContext) -> Outcome:
    m = k_sublattice_3C().m
    found = m4_set(m)
    n = m.rank
    alphas = [[int(x) for x in row] for row in found.array[:int(ctx.setting('m4_alphas', 4))]]
    zero = [Fraction(0)] * n
    # x runs over half the basis vectors of M, mu over the basis vectors of M
    halves = [[Fraction(1, 2) if j == i else Fraction(0) for j in range(n)] for i in range(n)]
    halves.append([Fraction(1, 2)] * n)
    checked = 0
    witness = None
    for alpha in alphas:
        for i in range(n):
            shifted = [a + (2 if j == i else 0) for j, a in enumerate(alpha)]
            for x in halves:
                checked += 1
                if phi_sign(x, shifted, m) != phi_sign(x, alpha, m):
                    witness = witness or {'alpha': alpha, 'mu_index': i, 'x': [str(v) for v in x]}
    well_defined = witness is None
    metrics = {'m4_count': found.count, 'sign_at_zero': phi_sign(zero, alphas[0], m),
               'pairs_checked': checked, 'well_defined_mod_2m': well_defined}
    return Outcome(found.count == 240 and metrics['sign_at_zero'] == 1 and well_defined, metrics,
                   witness=witness)


@lemma("appB-miyamoto", randomized=True, slow=True)
def miyamoto_on_leech(ctx: VerificationContext) -> Outcome:
    lattice, h = leech_with_h(ctx.seed)
    r_l = fixed_sublattice(lattice, h, name="R_L")
    q_l = annihilator(lattice, r_l, name="Q_L")
    subs = ee8_sublattices(lattice, q_l)
    traces, refusals = [], []
    for sub in subs:
        t = miyamoto_isometry(lattice, sub)
        if not isinstance(t, Isometry):
            refusals.append({'sublattice': sub.name, 'reason': t.reason, 'witness': t.witness})
            continue
        if not t.power(2).is_identity():
            refusals.append({'sublattice': sub.name, 'reason': 'does not square to 1'})
            continue
        traces.append(trace(t))
    metrics = {
        'classes': len(subs),
        'sublattice_dets': [s.lattice.determinant for s in subs],
        'involutions': len(traces),
        'traces': traces,
    }
    ok = len(subs) == 3 and not refusals and traces == [8, 8, 8] \
        and all(s.lattice.determinant == 2 ** 8 for s in subs)
    return Outcome(ok, metrics, witness=refusals or None)


# --- gl(n+1) identities -----------------------------------------------------

def lie_identity_checks(n: int) -> Dict[str, Any]:
    control_power = -1 if n >= 2 else 1
    return {
        'shift_conjugation': check_shift_conjugation(n),
        'bbt_permutation': check_bbt_permutation(n),
        'b_inverse_p_b': check_b_inverse_p_b(n),
        'torus_exponents': check_torus_exponents(n),
        'diagonal_form': check_diagonal_form(n),
        'eigenvalue_exponents': eigenvalue_exponents(n),
        'control_rejected': n < 2 or not check_diagonal_form(n, 1, expected_power=control_power),
    }


@lemma("lie-identities")
def lie_identities(ctx: VerificationContext) -> Outcome:
    sizes = [int(n) for n in ctx.setting('lie_sizes', [2, 4, 8])]
    metrics = {f'n={n}': lie_identity_checks(n) for n in sizes}
    failed = [key for key, checks in metrics.items()
              if not all(v for k, v in checks.items() if k != 'eigenvalue_exponents')]
    return Outcome(not failed, metrics, witness=failed or None)
