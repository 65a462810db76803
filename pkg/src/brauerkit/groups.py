"""Finite groups as Cayley tables, with subgroup and twisted-diagonal machinery.

Groups are built either from permutation generators (closed by an orbit
algorithm) or directly from a multiplication table.  Elements are integer
indices with the identity at index 0; every constructed element records a
(parent, generator) link so that representation matrices can be assembled
by following words in the generators.
"""

from __future__ import annotations

from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np

DEFAULT_ORDER_CAP = 200


class CapExceeded(RuntimeError):
    """Raised when a construction would exceed the configured order cap."""


def parse_cycles(text: str, degree: int) -> tuple:
    """Parse cycle notation like ``(1 2 3)(4 5)`` into a 0-indexed image tuple."""
    img = list(range(degree))
    text = text.strip()
    if text in ("()", "id", ""):
        return tuple(img)
    depth = 0
    cycles: List[List[int]] = []
    cur: List[str] = []
    tok = ""
    for ch in text:
        if ch == "(":
            if depth:
                raise ValueError(f"nested parenthesis in {text!r}")
            depth = 1
            cur = []
            tok = ""
        elif ch == ")":
            if tok:
                cur.append(tok)
                tok = ""
            depth = 0
            cycles.append([int(t) for t in cur])
        elif ch in " ,":
            if tok:
                cur.append(tok)
                tok = ""
        else:
            tok += ch
    if depth:
        raise ValueError(f"unbalanced parenthesis in {text!r}")
    for cyc in cycles:
        if any(not 1 <= v <= degree for v in cyc):
            raise ValueError(f"cycle entry out of range 1..{degree}: {cyc}")
        if len(set(cyc)) != len(cyc):
            raise ValueError(f"repeated point in cycle {cyc}")
        for i, v in enumerate(cyc):
            img[v - 1] = cyc[(i + 1) % len(cyc)] - 1
    return tuple(img)


def cycles_to_text(perm: Sequence[int]) -> str:
    seen = [False] * len(perm)
    parts = []
    for start in range(len(perm)):
        if seen[start] or perm[start] == start:
            seen[start] = True
            continue
        cyc = [start]
        seen[start] = True
        nxt = perm[start]
        while nxt != start:
            cyc.append(nxt)
            seen[nxt] = True
            nxt = perm[nxt]
        parts.append("(" + " ".join(str(v + 1) for v in cyc) + ")")
    return "".join(parts) if parts else "()"


class FiniteGroup:
    """A finite group given by its Cayley table.

    ``mul[i, j]`` is the index of the product, ``inv[i]`` of the inverse,
    and index 0 is the identity.  ``links[i] = (parent, gen)`` expresses
    element i as ``parent * generators[gen]`` (identity links to (-1, -1)),
    which representation code uses to extend generator matrices to all
    elements.
    """

    def __init__(
        self,
        mul: np.ndarray,
        labels: Optional[List[str]] = None,
        generators: Optional[List[int]] = None,
        links: Optional[List[Tuple[int, int]]] = None,
        name: str = "group",
        check: bool = True,
    ):
        self.mul = np.asarray(mul, dtype=np.int64)
        self.order = self.mul.shape[0]
        self.labels = labels if labels is not None else [f"g{i}" for i in range(self.order)]
        self.name = name
        if check:
            self._validate()
        inv = np.empty(self.order, dtype=np.int64)
        for i in range(self.order):
            hits = np.nonzero(self.mul[i] == 0)[0]
            if hits.size != 1:
                raise ValueError("table has no unique inverse; not a group")
            inv[i] = hits[0]
        self.inv = inv
        if generators is None:
            generators = self._greedy_generators()
        self.generators = list(generators)
        if links is None:
            links = self._bfs_links()
        self.links = links
        self.product_of: Optional[Tuple["FiniteGroup", "FiniteGroup"]] = None
        self.p1: Optional[np.ndarray] = None
        self.p2: Optional[np.ndarray] = None
        self._caches: Dict = {}

    # -- construction checks -------------------------------------------------
    def _validate(self):
        n = self.order
        if self.mul.shape != (n, n):
            raise ValueError("Cayley table must be square")
        if np.any((self.mul < 0) | (self.mul >= n)):
            raise ValueError("table entries out of range")
        if not np.array_equal(self.mul[0], np.arange(n)) or not np.array_equal(
            self.mul[:, 0], np.arange(n)
        ):
            raise ValueError("index 0 is not a two-sided identity")
        if n <= DEFAULT_ORDER_CAP:
            left = self.mul[self.mul]  # left[i,j,k] = mul[mul[i,j], k]
            right = self.mul[:, self.mul]  # right[i,j,k] = mul[i, mul[j,k]]
            if not np.array_equal(left, right):
                raise ValueError("associativity fails")

    def _greedy_generators(self) -> List[int]:
        gens: List[int] = []
        reach = {0}
        for i in range(1, self.order):
            if i not in reach:
                gens.append(i)
                frontier = list(reach | {i})
                reach = set()
                queue = [0]
                reach.add(0)
                while queue:
                    x = queue.pop()
                    for g in gens:
                        y = int(self.mul[x, g])
                        if y not in reach:
                            reach.add(y)
                            queue.append(y)
                if len(reach) == self.order:
                    break
        return gens

    def _bfs_links(self) -> List[Tuple[int, int]]:
        links: List[Tuple[int, int]] = [(-2, -2)] * self.order
        links[0] = (-1, -1)
        queue = [0]
        seen = {0}
        while queue:
            nxt = []
            for x in queue:
                for gi, g in enumerate(self.generators):
                    y = int(self.mul[x, g])
                    if y not in seen:
                        seen.add(y)
                        links[y] = (x, gi)
                        nxt.append(y)
            queue = nxt
        if len(seen) != self.order:
            raise ValueError("generators do not generate the group")
        return links

    # -- basic queries ---------------------------------------------------------
    def product(self, i: int, j: int) -> int:
        return int(self.mul[i, j])

    def inverse(self, i: int) -> int:
        return int(self.inv[i])

    def conjugate(self, g: int, x: int) -> int:
        """g x g^-1."""
        return int(self.mul[self.mul[g, x], self.inv[g]])

    def element_order(self, x: int) -> int:
        k, y = 1, x
        while y != 0:
            y = int(self.mul[y, x])
            k += 1
        return k

    def exponent_valuation(self, p: int) -> int:
        n, v = self.order, 0
        while n % p == 0:
            n //= p
            v += 1
        return v

    def conjugacy_classes(self) -> List[Tuple[int, ...]]:
        if "classes" not in self._caches:
            seen = [False] * self.order
            classes = []
            for x in range(self.order):
                if seen[x]:
                    continue
                orb = sorted({self.conjugate(g, x) for g in range(self.order)})
                for y in orb:
                    seen[y] = True
                classes.append(tuple(orb))
            self._caches["classes"] = classes
        return self._caches["classes"]

    def subgroup(self, elems: Iterable[int]) -> "Subgroup":
        return Subgroup(self, elems)

    def trivial_subgroup(self) -> "Subgroup":
        return Subgroup(self, (0,), check=False)

    def full_subgroup(self) -> "Subgroup":
        return Subgroup(self, range(self.order), check=False)

    def closure(self, elems: Iterable[int]) -> Tuple[int, ...]:
        """Subgroup generated by elems, as a sorted index tuple."""
        gens = sorted(set(elems) | {0})
        seen = {0}
        queue = [0]
        while queue:
            x = queue.pop()
            for g in gens:
                y = int(self.mul[x, g])
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
        return tuple(sorted(seen))

    def __repr__(self):
        return f"FiniteGroup({self.name}, order={self.order})"


def group_from_generators(
    degree: int, perms: Sequence, cap: int = DEFAULT_ORDER_CAP, name: str = "group"
) -> FiniteGroup:
    """Close permutation generators under products and build the Cayley table."""
    parsed = []
    for p in perms:
        if isinstance(p, str):
            p = parse_cycles(p, degree)
        p = tuple(p)
        if sorted(p) != list(range(degree)):
            raise ValueError(f"not a permutation of 0..{degree-1}: {p}")
        parsed.append(p)
    ident = tuple(range(degree))
    elems = [ident]
    index = {ident: 0}
    links: List[Tuple[int, int]] = [(-1, -1)]
    queue = [0]
    while queue:
        nxt = []
        for xi in queue:
            x = elems[xi]
            for gi, g in enumerate(parsed):
                y = tuple(g[x[t]] for t in range(degree))  # x then g
                if y not in index:
                    if len(elems) >= cap:
                        raise CapExceeded(f"group order exceeds cap {cap}")
                    index[y] = len(elems)
                    elems.append(y)
                    links.append((xi, gi))
                    nxt.append(index[y])
        queue = nxt
    n = len(elems)
    mul = np.empty((n, n), dtype=np.int64)
    for i, a in enumerate(elems):
        for j, b in enumerate(elems):
            mul[i, j] = index[tuple(b[a[t]] for t in range(degree))]
    gen_idx = [index[g] for g in parsed]
    labels = [cycles_to_text(e) for e in elems]
    grp = FiniteGroup(mul, labels=labels, generators=gen_idx, links=links, name=name)
    return grp


def direct_product(g: FiniteGroup, h: FiniteGroup, name: Optional[str] = None) -> FiniteGroup:
    """G x H with lexicographic element indexing and explicit projections."""
    ng, nh = g.order, h.order
    n = ng * nh
    gi, hj = np.divmod(np.arange(n), nh)
    mul = g.mul[gi[:, None], gi[None, :]] * nh + h.mul[hj[:, None], hj[None, :]]
    labels = [f"({g.labels[a]},{h.labels[b]})" for a, b in zip(gi, hj)]
    gens = [int(a * nh) for a in g.generators] + [int(b) for b in h.generators]
    grp = FiniteGroup(
        mul,
        labels=labels,
        generators=gens,
        name=name or f"{g.name}x{h.name}",
        check=(n <= DEFAULT_ORDER_CAP),
    )
    grp.product_of = (g, h)
    grp.p1 = gi
    grp.p2 = hj
    return grp


def pair_index(prod: FiniteGroup, a: int, b: int) -> int:
    if prod.product_of is None:
        raise ValueError("not a direct product group")
    return a * prod.product_of[1].order + b


class Subgroup:
    """A subgroup of a Cayley-table group, stored as a sorted element tuple."""

    __slots__ = ("group", "elems", "order", "_set")

    def __init__(self, group: FiniteGroup, elems: Iterable[int], check: bool = True):
        self.group = group
        self.elems = tuple(sorted(set(int(e) for e in elems)))
        self.order = len(self.elems)
        self._set = frozenset(self.elems)
        if check:
            if 0 not in self._set:
                raise ValueError("subgroup must contain the identity")
            for a in self.elems:
                if int(group.inv[a]) not in self._set:
                    raise ValueError("subgroup not closed under inverses")
                for b in self.elems:
                    if int(group.mul[a, b]) not in self._set:
                        raise ValueError("subgroup not closed under products")

    def __contains__(self, x: int) -> bool:
        return x in self._set

    def __eq__(self, other):
        return isinstance(other, Subgroup) and self.group is other.group and self.elems == other.elems

    def __hash__(self):
        return hash((id(self.group), self.elems))

    def __le__(self, other: "Subgroup") -> bool:
        return self._set <= other._set

    def __repr__(self):
        return f"Subgroup(order={self.order}, elems={self.elems[:8]}{'...' if self.order > 8 else ''})"

    def conjugate_by(self, g: int) -> "Subgroup":
        grp = self.group
        return Subgroup(grp, (grp.conjugate(g, x) for x in self.elems), check=False)

    def generators(self) -> List[int]:
        got = {0}
        gens: List[int] = []
        for x in self.elems:
            if x not in got:
                gens.append(x)
                got = set(self.group.closure(gens))
                if len(got) == self.order:
                    break
        return gens

    def is_p_group(self, p: int) -> bool:
        n = self.order
        while n % p == 0:
            n //= p
        return n == 1

    def as_group(self) -> Tuple[FiniteGroup, Dict[int, int]]:
        """Materialize as a standalone group; returns (group, parent->local map)."""
        key = ("as_group", self.elems)
        cache = self.group._caches.setdefault("subgroup_groups", {})
        if key not in cache:
            to_local = {e: i for i, e in enumerate(self.elems)}
            n = self.order
            mul = np.empty((n, n), dtype=np.int64)
            for i, a in enumerate(self.elems):
                for j, b in enumerate(self.elems):
                    mul[i, j] = to_local[int(self.group.mul[a, b])]
            labels = [self.group.labels[e] for e in self.elems]
            grp = FiniteGroup(mul, labels=labels, name=f"{self.group.name}|sub{self.order}", check=False)
            cache[key] = (grp, to_local)
        return cache[key]


def normalizer(sub: Subgroup) -> Subgroup:
    grp = sub.group
    cache = grp._caches.setdefault("normalizers", {})
    if sub.elems not in cache:
        elems = [g for g in range(grp.order) if all(grp.conjugate(g, x) in sub for x in sub.elems)]
        cache[sub.elems] = Subgroup(grp, elems, check=False)
    return cache[sub.elems]


def centralizer(grp: FiniteGroup, sub: Subgroup) -> Subgroup:
    elems = [
        g
        for g in range(grp.order)
        if all(grp.mul[g, x] == grp.mul[x, g] for x in sub.elems)
    ]
    return Subgroup(grp, elems, check=False)


def sylow_subgroup(grp: FiniteGroup, p: int) -> Subgroup:
    """A Sylow p-subgroup, grown deterministically through normalizers."""
    target = 1
    n = grp.order
    while n % p == 0:
        n //= p
        target *= p
    cur = grp.trivial_subgroup()
    while cur.order < target:
        norm = normalizer(cur)
        nxt = None
        for x in norm.elems:
            o = grp.element_order(x)
            if o % p != 0:
                continue
            k = o
            while k % p == 0:
                k //= p
            # x^k is the p-part of x
            xp = 0
            for _ in range(k):
                xp = grp.product(xp, x)
            if xp in cur or xp == 0:
                continue
            cand = Subgroup(grp, grp.closure(list(cur.elems) + [xp]), check=False)
            if cand.is_p_group(p) and cand.order > cur.order:
                nxt = cand
                break
        if nxt is None:
            raise RuntimeError("Sylow growth failed")  # pragma: no cover
        cur = nxt
    return cur


def left_transversal(p_sub: Subgroup, q_sub: Subgroup) -> List[int]:
    """Representatives of the left cosets xQ inside P, least index per coset."""
    if not q_sub <= p_sub:
        raise ValueError("transversal requires Q <= P")
    grp = p_sub.group
    seen = set()
    reps = []
    for x in p_sub.elems:
        if x in seen:
            continue
        reps.append(x)
        for qq in q_sub.elems:
            seen.add(int(grp.mul[x, qq]))
    return reps


def subgroups_all(grp: FiniteGroup, within: Optional[Subgroup] = None, cap: int = 20000) -> List[Subgroup]:
    """Every subgroup (of ``within`` if given), by bottom-up join closure.

    All cyclic subgroups are seeded; the worklist joins each known subgroup
    with each cyclic subgroup of a prime-power generator, which reaches
    every subgroup since a group is generated by its elements of prime
    power order.
    """
    domain = within.elems if within is not None else tuple(range(grp.order))
    domain_set = set(domain)
    cyclics = {}
    for x in domain:
        c = grp.closure([x])
        cyclics.setdefault(c, x)
    pp_cyclics = []
    for c in sorted(cyclics):
        o = len(c)
        # keep prime-power cyclic joins only
        primes = _prime_divisors_small(o)
        if len(primes) == 1 or o == 1:
            pp_cyclics.append(c)
    found = {tuple([0])}
    found.update(cyclics.keys())
    work = sorted(found)
    while work:
        nxt = []
        for h in work:
            hs = set(h)
            for c in pp_cyclics:
                if set(c) <= hs:
                    continue
                k = grp.closure(h + c)
                if not set(k) <= domain_set:
                    continue
                if k not in found:
                    if len(found) >= cap:
                        raise CapExceeded("subgroup enumeration exceeds cap")
                    found.add(k)
                    nxt.append(k)
        work = nxt
    return [Subgroup(grp, e, check=False) for e in sorted(found, key=lambda t: (len(t), t))]


def _prime_divisors_small(n: int):
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def conjugacy_class_of_subgroup(sub: Subgroup) -> List[Tuple[int, ...]]:
    grp = sub.group
    seen = {sub.elems}
    for g in range(grp.order):
        seen.add(sub.conjugate_by(g).elems)
    return sorted(seen)


def are_conjugate_subgroups(a: Subgroup, b: Subgroup) -> bool:
    if a.group is not b.group or a.order != b.order:
        return False
    if a.elems == b.elems:
        return True
    grp = a.group
    target = b._set
    return any(set(grp.conjugate(g, x) for x in a.elems) == target for g in range(grp.order))


def subgroups_up_to_conjugacy(
    grp: FiniteGroup, p: Optional[int] = None, cap: int = 20000
) -> List[Subgroup]:
    """Class representatives of subgroups (p-subgroups when p is given).

    p-subgroups are enumerated inside a Sylow p-subgroup and then fused
    under conjugacy in the whole group.
    """
    key = ("subclasses", p)
    if key not in grp._caches:
        if p is None:
            subs = subgroups_all(grp, cap=cap)
        else:
            syl = sylow_subgroup(grp, p)
            subs = subgroups_all(grp, within=syl, cap=cap)
        reps: List[Subgroup] = []
        seen_elem_sets = set()
        for s in subs:
            if s.elems in seen_elem_sets:
                continue
            cls = conjugacy_class_of_subgroup(s)
            seen_elem_sets.update(cls)
            reps.append(Subgroup(grp, cls[0], check=False))
        reps.sort(key=lambda s: (s.order, s.elems))
        grp._caches[key] = reps
    return grp._caches[key]


def subgroup_class_index(classes: List[Subgroup], sub: Subgroup) -> int:
    for i, rep in enumerate(classes):
        if are_conjugate_subgroups(rep, sub):
            return i
    raise ValueError("subgroup not found among class representatives")


def maximal_subgroups(sub: Subgroup) -> List[Subgroup]:
    """Maximal proper subgroups of a p-group subgroup (index p)."""
    grp = sub.group
    primes = _prime_divisors_small(sub.order)
    if len(primes) != 1:
        raise ValueError("maximal_subgroups is for p-groups")
    p = primes[0]
    subs = subgroups_all(grp, within=sub)
    return [s for s in subs if s.order * p == sub.order]


class GroupIso:
    """An isomorphism between subgroups, possibly of different groups."""

    def __init__(self, source: Subgroup, target: Subgroup, mapping: Dict[int, int], check: bool = True):
        self.source = source
        self.target = target
        self.mapping = dict(mapping)
        if check:
            self.validate()

    def validate(self):
        src, tgt = self.source, self.target
        if set(self.mapping) != set(src.elems):
            raise ValueError("mapping domain mismatch")
        if set(self.mapping.values()) != set(tgt.elems):
            raise ValueError("mapping is not onto the target")
        gm, hm = src.group.mul, tgt.group.mul
        for a in src.elems:
            for b in src.elems:
                if self.mapping[int(gm[a, b])] != int(hm[self.mapping[a], self.mapping[b]]):
                    raise ValueError("mapping is not multiplicative")

    def __call__(self, x: int) -> int:
        return self.mapping[x]

    def inverse(self) -> "GroupIso":
        return GroupIso(self.target, self.source, {v: k for k, v in self.mapping.items()}, check=False)

    def __eq__(self, other):
        return (
            isinstance(other, GroupIso)
            and self.source == other.source
            and self.target == other.target
            and self.mapping == other.mapping
        )

    def __repr__(self):
        return f"GroupIso(|P|={self.source.order})"


def identity_iso(sub: Subgroup) -> GroupIso:
    return GroupIso(sub, sub, {x: x for x in sub.elems}, check=False)


def twisted_diagonal(prod: FiniteGroup, phi: GroupIso) -> Subgroup:
    """Delta(phi) = {(u, phi(u))} inside the product group."""
    if prod.product_of is None:
        raise ValueError("twisted_diagonal needs a direct product group")
    g, h = prod.product_of
    if phi.source.group is not g or phi.target.group is not h:
        raise ValueError("iso factors do not match the product")
    elems = [pair_index(prod, u, phi(u)) for u in phi.source.elems]
    return Subgroup(prod, elems)


def is_twisted_diagonal(prod: FiniteGroup, x: Subgroup):
    """Decide twisted-diagonality; returns (flag, iso or None).

    x is twisted diagonal iff the first projection is injective on it, in
    which case the recovered iso sends u to the second component of its
    unique preimage.
    """
    if prod.product_of is None or x.group is not prod:
        raise ValueError("subgroup is not in a direct product group")
    g, h = prod.product_of
    firsts = [int(prod.p1[e]) for e in x.elems]
    if len(set(firsts)) != x.order:
        return False, None
    mapping = {int(prod.p1[e]): int(prod.p2[e]) for e in x.elems}
    src = Subgroup(g, mapping.keys(), check=False)
    tgt = Subgroup(h, mapping.values(), check=False)
    return True, GroupIso(src, tgt, mapping)


def injective_homomorphisms(r: Subgroup, q: Subgroup) -> List[GroupIso]:
    """All injective homomorphisms R -> Q, as isos onto their images."""
    gens = r.generators()
    rgrp, qgrp = r.group, q.group
    if not gens:
        return [GroupIso(r, Subgroup(qgrp, (0,), check=False), {0: 0}, check=False)]
    rl, to_local = r.as_group()
    out = []

    def extend(partial_imgs: List[int]):
        if len(partial_imgs) == len(gens):
            # build the full map by BFS links of the local group
            lgens = [to_local[g] for g in gens]
            lmap = {0: 0}
            order_pairs = []
            # local group generated by lgens: follow links of a BFS
            queue = [0]
            seen = {0}
            img_of_local = {0: 0}
            gen_img = {lg: im for lg, im in zip(lgens, partial_imgs)}
            while queue:
                nxt = []
                for x in queue:
                    for lg in lgens:
                        y = int(rl.mul[x, lg])
                        if y not in seen:
                            seen.add(y)
                            img_of_local[y] = int(qgrp.mul[img_of_local[x], gen_img[lg]])
                            nxt.append(y)
                queue = nxt
            if len(seen) != rl.order:
                return
            mapping = {r.elems[loc]: img for loc, img in img_of_local.items()}
            imgs = set(mapping.values())
            if len(imgs) != r.order:
                return
            gm = rgrp.mul
            qm = qgrp.mul
            for a in r.elems:
                for b in r.elems:
                    if mapping[int(gm[a, b])] != int(qm[mapping[a], mapping[b]]):
                        return
            tgt = Subgroup(qgrp, imgs, check=False)
            out.append(GroupIso(r, tgt, mapping, check=False))
            return
        g = gens[len(partial_imgs)]
        og = rgrp.element_order(g)
        for cand in q.elems:
            if og % qgrp.element_order(cand) == 0:
                extend(partial_imgs + [cand])

    extend([])
    # dedupe identical mappings
    uniq = {}
    for iso in out:
        uniq[tuple(sorted(iso.mapping.items()))] = iso
    return [uniq[k] for k in sorted(uniq)]


# ---------------------------------------------------------------------------
# stock groups and the group file format
# ---------------------------------------------------------------------------


def cyclic_group(n: int) -> FiniteGroup:
    return group_from_generators(n, [tuple(range(1, n)) + (0,)], name=f"C{n}") if n > 1 else trivial_group()


def trivial_group() -> FiniteGroup:
    return FiniteGroup(np.zeros((1, 1), dtype=np.int64), labels=["()"], generators=[], name="1")


def symmetric_group(n: int) -> FiniteGroup:
    if n < 2:
        return trivial_group()
    swap = (1, 0) + tuple(range(2, n))
    cyc = tuple(range(1, n)) + (0,)
    return group_from_generators(n, [swap, cyc], name=f"S{n}")


def dihedral_group(n: int) -> FiniteGroup:
    """Dihedral group of order 2n acting on n points."""
    rot = tuple(range(1, n)) + (0,)
    refl = tuple((n - i) % n for i in range(n))
    return group_from_generators(n, [rot, refl], name=f"D{2*n}")


def alternating_group(n: int) -> FiniteGroup:
    if n == 4:
        return group_from_generators(4, ["(1 2 3)", "(1 2)(3 4)"], name="A4")
    if n == 5:
        return group_from_generators(5, ["(1 2 3)", "(3 4 5)"], name="A5")
    raise ValueError("only A4 and A5 are stocked")


def klein_four_group() -> FiniteGroup:
    return group_from_generators(4, ["(1 2)(3 4)", "(1 3)(2 4)"], name="C2xC2")


def group_to_text(grp: FiniteGroup, degree: Optional[int] = None) -> str:
    """Serialize in the generator file format (only for permutation-built groups)."""
    deg = degree
    if deg is None:
        deg = max((len(parse_cycles(grp.labels[g], 10**6)) for g in grp.generators), default=1)
    lines = [f"group degree={deg} order={grp.order}"]
    for g in grp.generators:
        lines.append(grp.labels[g])
    return "\n".join(lines)


def group_from_text(text: str, cap: int = DEFAULT_ORDER_CAP) -> FiniteGroup:
    lines = [ln.strip() for ln in text.strip().splitlines() if ln.strip() and not ln.startswith("#")]
    if not lines or not lines[0].startswith("group"):
        raise ValueError("bad group file: missing 'group' header")
    kv = dict(part.split("=", 1) for part in lines[0].split()[1:])
    degree = int(kv["degree"])
    perms = [parse_cycles(ln, degree) for ln in lines[1:]]
    grp = group_from_generators(degree, perms, cap=cap)
    if "order" in kv and kv["order"] not in ("?", ""):
        if int(kv["order"]) != grp.order:
            raise ValueError(f"declared order {kv['order']} but closure has {grp.order}")
    return grp
