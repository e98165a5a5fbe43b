"""Local classification of a triple of GL(2) representations at a
finite prime: the case labels driving the closed-form zeta integrals,
and the global level/discriminant bookkeeping (Sigma sets, d-factors,
exceptional primes).
"""

from ..errors import ConsistencyError, DomainError, UnsupportedError
from ..local_reps.scalars import Cyc


CASES = ("unramified", "Ia", "Ib", "IIa", "IIb")


def _is_discrete(rep):
    return rep.kind in ("special", "supercuspidal")


def _pair_L_nontrivial(r2, r3):
    """Whether L(s, pi2 x pi3) != 1 for two discrete series."""
    if r2.kind == "special" and r3.kind == "special":
        # L(s, sigma2 St x sigma3 St) != 1 iff sigma2 sigma3 unramified
        return (r2.sigma * r3.sigma).is_unramified()
    if r2.kind == "supercuspidal" and r3.kind == "supercuspidal":
        # nontrivial iff pi3 ~ pi2~ (x) unramified; the descriptor
        # carries enough to detect the tabulated contragredient case
        if r2.c != r3.c or r2.dichotomy != r3.dichotomy:
            return False
        om = r2.central_char() * r3.central_char()
        return om.unit.c == 0
    # special x supercuspidal pairs have trivial L
    return False


class TripleLocalData:
    """A triple of local representations at one prime, validated and
    labeled with its zeta-integral case.

    The product of the central characters must be trivial.  The triple
    is rearranged (tracked in .order) so that c1 <= min{c2, c3, 1} with
    pi1, pi3 minimal and pi3 principal or pi2, pi3 both discrete,
    matching the running ramification hypothesis; a triple violating it
    raises DomainError.
    """

    def __init__(self, ell, reps):
        if len(reps) != 3:
            raise DomainError("a triple needs three representations")
        for r in reps:
            if r.ell != ell:
                raise ConsistencyError("representation at wrong prime")
        om = reps[0].central_char() * reps[1].central_char() * \
            reps[2].central_char()
        if om.unit.c != 0 or om.at_ell != Cyc.one():
            raise ConsistencyError(
                "product of central characters is not trivial")
        self.ell = ell
        self.reps = tuple(reps)
        self.order = self._rearrange()
        self.case = self._label()

    def _rearrange(self):
        conds = [r.conductor_exponent() for r in self.reps]
        best = None
        for perm in ((0, 1, 2), (0, 2, 1), (1, 0, 2), (1, 2, 0),
                     (2, 0, 1), (2, 1, 0)):
            c1, c2, c3 = (conds[i] for i in perm)
            r1, r2, r3 = (self.reps[i] for i in perm)
            if c1 > min(c2, c3, 1):
                continue
            if not (r1.minimal and r3.minimal):
                continue
            if not (r3.kind == "principal" or
                    (_is_discrete(r2) and _is_discrete(r3))):
                continue
            key = (c1, c3, perm)
            if best is None or key < best:
                best = key
        if best is None:
            raise DomainError("triple violates the ramification "
                              "hypothesis at %d" % self.ell)
        return best[2]

    def rep(self, i):
        """i-th representation (1-based) in the rearranged order."""
        return self.reps[self.order[i - 1]]

    def conductors(self):
        return tuple(self.rep(i).conductor_exponent() for i in (1, 2, 3))

    def c_star(self):
        c1, c2, c3 = self.conductors()
        return max(c2, c3)

    def _label(self):
        r1, r2, r3 = (self.rep(i) for i in (1, 2, 3))
        c1, c2, c3 = self.conductors()
        if c1 == c2 == c3 == 0:
            return "unramified"
        if r3.kind == "principal" and r3.chi.unit.c == 0:
            if not _is_discrete(r1) and not _is_discrete(r2) and \
                    not _is_discrete(r3):
                return "Ia"
            if _is_discrete(r2) or _is_discrete(r1):
                return "Ia"
        if _is_discrete(r1) and _is_discrete(r2) and _is_discrete(r3):
            return "Ib"
        if r1.kind == "principal" and _is_discrete(r2) and _is_discrete(r3):
            return "IIa" if _pair_L_nontrivial(r2, r3) else "IIb"
        if r3.kind == "principal":
            return "Ia"
        raise UnsupportedError("unlabeled ramification pattern")


def classify_triple(triples):
    """The adjustment of levels (d_f, d_g, d_h) and the Sigma-sets for a
    triple (f, g, h), given the local data {ell: (pi_f, pi_g, pi_h)} at
    the ramified primes away from p.

    Conventions: c_l(xy) = max{c_l(x), c_l(y)} and c_l^min is the
    minimum of the three conductor exponents.
    """
    names = ("f", "g", "h")
    conds = {}
    princ = {}
    disc = {}
    pairL = {}
    for ell, reps in sorted(triples.items()):
        TripleLocalData(ell, reps)      # validates the triple
        conds[ell] = {n: r.conductor_exponent()
                      for n, r in zip(names, reps)}
        princ[ell] = {n: r.kind == "principal"
                      for n, r in zip(names, reps)}
        disc[ell] = {n: _is_discrete(r) for n, r in zip(names, reps)}
        byname = dict(zip(names, reps))
        for x, y in (("f", "g"), ("f", "h"), ("g", "h")):
            if disc[ell][x] and disc[ell][y]:
                pairL[(ell, x, y)] = _pair_L_nontrivial(byname[x],
                                                        byname[y])

    def others(x):
        return tuple(n for n in names if n != x)

    sigma = {"I": {}, "IIa": {}, "IIb": {}, "max": {}}
    for x, y in (("f", "g"), ("f", "h"), ("g", "h")):
        z = next(n for n in names if n not in (x, y))
        sigma["I"][(x, y)] = [
            ell for ell in conds
            if (princ[ell][x] or princ[ell][y] or
                all(disc[ell][n] for n in names))
            and conds[ell][z] < min(conds[ell][x], conds[ell][y])]
    for x in names:
        y, z = others(x)
        sigma["IIa"][x] = [
            ell for ell in conds
            if disc[ell][y] and disc[ell][z]
            and pairL[(ell, y, z)] and conds[ell][x] == 0]
        sigma["IIb"][x] = [
            ell for ell in conds
            if disc[ell][y] and disc[ell][z]
            and not pairL[(ell, y, z)] and princ[ell][x]
            and conds[ell][x] < min(conds[ell][y], conds[ell][z])]
        sigma["max"][x] = [
            ell for ell in conds
            if conds[ell][y] == conds[ell][z] ==
            min(conds[ell].values()) < conds[ell][x]]

    def pair_key(x, y):
        return (x, y) if (x, y) in sigma["I"] else (y, x)

    d_I = {}
    d_II = {}
    d_max = {}
    for x in names:
        y, z = others(x)
        v = 1
        for w in (y, z):
            for ell in sigma["I"][pair_key(x, w)]:
                v *= ell ** (max(conds[ell][x], conds[ell][w])
                             - conds[ell][x])
        d_I[x] = v
        v = 1
        for ell in sigma["IIa"][x]:
            cgh = max(conds[ell][y], conds[ell][z])
            v *= ell ** ((cgh + 1) // 2)
        for ell in sigma["IIb"][x]:
            cgh = max(conds[ell][y], conds[ell][z])
            v *= ell ** (cgh - conds[ell][x])
        d_II[x] = v
        v = 1
        for ell in sigma["max"][x]:
            v *= ell ** (conds[ell][x] - min(conds[ell].values()))
        d_max[x] = v

    return {
        "sigma": sigma,
        "d_f": d_I["f"] * d_II["f"],
        "d_g": d_I["g"] * d_max["f"] * d_max["h"] * d_II["g"],
        "d_h": d_I["h"] * d_max["g"] * d_II["h"],
    }


def sigma_minus(triples):
    """Primes where the local root number of the triple is -1: all
    three unramified special with product of Steinberg signs +1.

    For unramified special pi_i = sigma_i|.|^{-1/2} St with sigma_i
    unramified quadratic-normalized sign a_i = sigma-part at l, Prasad's
    criterion gives eps = -1 iff a_1 a_2 a_3 = +1.
    """
    out = []
    for ell, reps in sorted(triples.items()):
        if not all(r.kind == "special" and r.sigma.unit.c == 0
                   for r in reps):
            continue
        prod = Cyc.one()
        for r in reps:
            # sign of the Steinberg twist: sigma(l) l^{1/2} in {+-1}
            prod = prod * r.sigma.at_ell * Cyc.ell_power_half(ell, 1)
        if prod == Cyc.one():
            out.append(ell)
        elif prod != -Cyc.one():
            raise DomainError("non-quadratic Steinberg twist at %d" % ell)
    return out


def sigma_exceptional(triples):
    """Primes where exactly one of the three is a spherical
    representation and the other two are type-1 supercuspidals
    interchanged by the unramified quadratic twist (contragredient up to
    unramified twist), contributing (1 + 1/l)^2 to the interpolation."""
    out = []
    for ell, reps in sorted(triples.items()):
        sc = [r for r in reps if r.kind == "supercuspidal"]
        sph = [r for r in reps if r.conductor_exponent() == 0]
        if len(sc) != 2 or len(sph) != 1:
            continue
        a, b = sc
        if a.dichotomy != 1 or b.dichotomy != 1:
            continue
        if a.c != b.c:
            continue
        om = a.central_char() * b.central_char()
        if om.unit.c == 0:
            out.append(ell)
    return out
