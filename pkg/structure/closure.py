"""Reachability in V(T(L)): one-step successors, breadth-first closure and
the monotone paths that witness U T(R) containing T(Q)."""
import logging
from collections import deque

from action.formulas import ActionMode, GeneratorIndex, act, chevalley_generators
from core.conf import gt_setting
from core.exceptions import DomainError, InvariantViolation
from core.omega import omega_plus_set, omega_profile
from core.tableaux import Seed, Shift, require_generic, require_same_seed
from core.vectors import GTVector

logger = logging.getLogger(__name__)


def one_step_successors(t, mode=ActionMode.GENERIC):
    """Tableaux with a nonzero coefficient in g T for some Chevalley generator g"""
    v = GTVector.basis(t)
    successors = set()
    for g in chevalley_generators(t.n):
        successors.update(act(g, v, mode).tableaux())
    return successors


def default_padding(n):
    padding = gt_setting('CLOSURE_PADDING')
    return n if padding is None else padding


def closure_bfs(r, box, padding=None, mode=ActionMode.GENERIC):
    """Everything reachable from r inside box inflated by padding, cut back to box"""
    require_generic(r.seed)
    padding = default_padding(r.n) if padding is None else padding
    window = box.inflate(padding)
    if r.shift not in window:
        return set()
    seen = {r}
    frontier = deque([r])
    while frontier:
        t = frontier.popleft()
        for q in one_step_successors(t, mode):
            if q not in seen and q.shift in window:
                seen.add(q)
                frontier.append(q)
    logger.debug("closure from %s: %d tableaux in %s", r.shift.entries, len(seen), window)
    return {t for t in seen if t.shift in box}


def intermediate_candidates(seed, z):
    """All (i, j) with z_ij != 0 and
    Omega+(T(L)) <= Omega+(T(L + z_ij delta^{ij})) <= Omega+(T(L + z))"""
    profile = omega_profile(seed)
    start = profile.plus_set(Shift.zero(seed.n))
    end = profile.plus_set(z)
    candidates = []
    for p, s in z.nonzero_coordinates():
        middle = profile.plus_set(Shift.unit(seed.n, p, s, z.at(p, s)))
        if start <= middle <= end:
            candidates.append((p, s))
    return candidates


def find_intermediate_index(seed, z):
    require_generic(seed)
    if not z.nonzero_coordinates():
        raise DomainError("the shift z must be nonzero")
    profile = omega_profile(seed)
    if not profile.plus_set(Shift.zero(seed.n)) <= profile.plus_set(z):
        raise DomainError(f"Omega+(T(L)) is not contained in Omega+(T(L + {list(z)}))")
    candidates = intermediate_candidates(seed, z)
    if not candidates:
        raise InvariantViolation(f"no intermediate index for seed ({seed}) and z = {list(z)}")
    return candidates[0]


def submodule_path(r, q):
    """r = T_0, ..., T_m = q, each T_{i+1} appearing in E_{k,k+1} T_i or E_{k+1,k} T_i"""
    require_generic(require_same_seed(r, q))
    if not omega_plus_set(r) <= omega_plus_set(q):
        raise DomainError("q is not in the submodule generated by r")
    path = [r]
    current = r
    while current != q:
        z = q.shift - current.shift
        p, s = find_intermediate_index(Seed.from_tableau(current), z)
        amount = z.at(p, s)
        step = 1 if amount > 0 else -1
        generator = GeneratorIndex(p, p + 1) if step > 0 else GeneratorIndex(p + 1, p)
        for _ in range(abs(amount)):
            following = current.moved(p, s, step)
            coefficient = act(generator, GTVector.basis(current)).coefficient(following)
            if not coefficient:
                raise InvariantViolation(
                    f"{generator} does not reach {following.shift.entries} "
                    f"from {current.shift.entries}")
            path.append(following)
            current = following
    return path

