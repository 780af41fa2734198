"""Connections between posets and their adjoint maps.

A connection from P to Q is a relation closed under weakening on both
sides: a <= b, b R c, c <= d imply a R d.  A connection may possess a left
adjoint map f (f(x) <= y iff x R y), a right adjoint map g (x R y iff
x <= g(y)), both, or neither; when both exist they form a Galois
connection.  Adjoints are unique, so a connection is faithfully described
by either map.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Optional

from .errors import DimensionMismatch, SizeBoundExceeded, SourceTargetMismatch
from .lattice import (
    FiniteLattice,
    MonotoneMap,
    compose_maps,
    down_set,
    dual,
    monotone_maps,
)


@dataclass(frozen=True, repr=False)
class Connection:
    """A weakening-closed relation between two posets, as a boolean table."""

    source: FiniteLattice
    target: FiniteLattice
    rel: tuple[tuple[bool, ...], ...]

    def __post_init__(self):
        if len(self.rel) != self.source.size or any(
            len(row) != self.target.size for row in self.rel
        ):
            raise DimensionMismatch(
                f"relation table must be {self.source.size}x{self.target.size}"
            )

    def __repr__(self) -> str:
        pairs = sum(1 for row in self.rel for v in row if v)
        return f"Connection({self.source.name}->{self.target.name}, pairs={pairs})"


@dataclass(frozen=True, repr=False)
class AdjointConnection:
    """A connection bundled with its adjoint maps.

    ``left`` and/or ``right`` may be absent; a fully adjoint connection has
    both.  Construction verifies the defining biconditional of every map
    that is present against the relation table.
    """

    conn: Connection
    left: Optional[MonotoneMap]
    right: Optional[MonotoneMap]

    def __post_init__(self):
        if self.left is None and self.right is None:
            raise ValueError("an adjoint connection needs at least one adjoint map")
        rel = self.conn.rel
        P, Q = self.conn.source, self.conn.target
        if self.left is not None:
            if self.left.source != P or self.left.target != Q:
                raise SourceTargetMismatch("left map does not match the connection's posets")
            for x in range(P.size):
                fx = self.left.values[x]
                for y in range(Q.size):
                    if Q.leq[fx][y] != rel[x][y]:
                        raise ValueError("left map fails the adjunction biconditional")
        if self.right is not None:
            if self.right.source != Q or self.right.target != P:
                raise SourceTargetMismatch("right map does not match the connection's posets")
            for y in range(Q.size):
                gy = self.right.values[y]
                for x in range(P.size):
                    if P.leq[x][gy] != rel[x][y]:
                        raise ValueError("right map fails the adjunction biconditional")

    @property
    def source(self) -> FiniteLattice:
        return self.conn.source

    @property
    def target(self) -> FiniteLattice:
        return self.conn.target

    @property
    def is_adjoint(self) -> bool:
        return self.left is not None and self.right is not None

    def __repr__(self) -> str:
        lv = self.left.values if self.left else None
        rv = self.right.values if self.right else None
        return (
            f"AdjointConnection({self.source.name}->{self.target.name}, "
            f"left={lv}, right={rv})"
        )


def find_weakening_violation(source, target, rel) -> Optional[tuple[int, int, int, int]]:
    """First quadruple (a, b, c, d) with a <= b R c <= d but not a R d, or None."""
    n, m = source.size, target.size
    if len(rel) != n or any(len(row) != m for row in rel):
        raise DimensionMismatch(f"relation table must be {n}x{m}")
    for b in range(n):
        row = rel[b]
        for c in range(m):
            if row[c]:
                above = target.leq[c]
                for d in range(m):
                    if above[d] and not row[d]:
                        return (b, b, c, d)
    for a in range(n):
        for b in range(n):
            if a != b and source.leq[a][b]:
                ra, rb = rel[a], rel[b]
                for c in range(m):
                    if rb[c] and not ra[c]:
                        return (a, b, c, c)
    return None


def is_connection(source, target, rel) -> bool:
    """True iff the weakening law holds for all quadruples."""
    return find_weakening_violation(source, target, rel) is None


def opposite(c: Connection) -> Connection:
    """The transposed relation, as a connection between the dual posets."""
    transposed = tuple(
        tuple(c.rel[x][y] for x in range(c.source.size)) for y in range(c.target.size)
    )
    return Connection(dual(c.target), dual(c.source), transposed)


def find_left_adjoint(c: Connection) -> Optional[MonotoneMap]:
    """The unique map f with f(x) <= y iff x R y, or None.

    f(x) must be the least y related to x; afterwards the biconditional is
    re-verified globally rather than trusting the pointwise minima.
    """
    P, Q, rel = c.source, c.target, c.rel
    leq_t = Q.leq
    values = []
    for x in range(P.size):
        ys = [y for y in range(Q.size) if rel[x][y]]
        least = next((y for y in ys if all(leq_t[y][z] for z in ys)), None)
        if least is None:
            return None
        values.append(least)
    for x in range(P.size):
        fx = values[x]
        for y in range(Q.size):
            if leq_t[fx][y] != rel[x][y]:
                return None
    return MonotoneMap(P, Q, tuple(values))


def find_right_adjoint(c: Connection) -> Optional[MonotoneMap]:
    """The unique map g with x R y iff x <= g(y), or None."""
    P, Q, rel = c.source, c.target, c.rel
    leq_s = P.leq
    values = []
    for y in range(Q.size):
        xs = [x for x in range(P.size) if rel[x][y]]
        greatest = next((x for x in xs if all(leq_s[z][x] for z in xs)), None)
        if greatest is None:
            return None
        values.append(greatest)
    for y in range(Q.size):
        gy = values[y]
        for x in range(P.size):
            if leq_s[x][gy] != rel[x][y]:
                return None
    return MonotoneMap(Q, P, tuple(values))


def connection_of_monotone_left(f: MonotoneMap) -> Connection:
    """The connection x R y iff f(x) <= y; find_left_adjoint recovers f."""
    leq_t = f.target.leq
    rel = tuple(tuple(leq_t[f.values[x]][y] for y in range(f.target.size)) for x in range(f.source.size))
    return Connection(f.source, f.target, rel)


def connection_of_monotone_right(g: MonotoneMap) -> Connection:
    """The connection x R y iff x <= g(y); find_right_adjoint recovers g."""
    leq_s = g.target.leq
    rel = tuple(tuple(leq_s[x][g.values[y]] for y in range(g.source.size)) for x in range(g.target.size))
    return Connection(g.target, g.source, rel)


def left_adjoint_connection(f: MonotoneMap) -> AdjointConnection:
    """Bundle f's connection with f, plus the right adjoint when it exists."""
    conn = connection_of_monotone_left(f)
    return AdjointConnection(conn, f, find_right_adjoint(conn))


def right_adjoint_connection(g: MonotoneMap) -> AdjointConnection:
    """Bundle g's connection with g, plus the left adjoint when it exists."""
    conn = connection_of_monotone_right(g)
    return AdjointConnection(conn, find_left_adjoint(conn), g)


def make_adjoint(c: Connection) -> Optional[AdjointConnection]:
    """Bundle both adjoints of c, verifying the full chain; None if either is missing."""
    left = find_left_adjoint(c)
    if left is None:
        return None
    right = find_right_adjoint(c)
    if right is None:
        return None
    return AdjointConnection(c, left, right)


def compose(r: Connection, s: Connection) -> Connection:
    """Relational composite: x (S.R) z iff some y has x R y and y S z."""
    if r.target != s.source:
        raise SourceTargetMismatch(
            f"cannot compose ...->{r.target.name} with {s.source.name}->..."
        )
    mid = range(r.target.size)
    rel = tuple(
        tuple(any(r.rel[x][y] and s.rel[y][z] for y in mid) for z in range(s.target.size))
        for x in range(r.source.size)
    )
    return Connection(r.source, s.target, rel)


def compose_adjoint(r: AdjointConnection, s: AdjointConnection) -> AdjointConnection:
    """Composite of two adjoint connections; adjoints compose map-wise."""
    if not (r.is_adjoint and s.is_adjoint):
        raise ValueError("compose_adjoint needs fully adjoint connections")
    conn = compose(r.conn, s.conn)
    return AdjointConnection(conn, compose_maps(r.left, s.left), compose_maps(s.right, r.right))


def restrict_left(ac: AdjointConnection, anchor: int) -> AdjointConnection:
    """Restrict a left adjoint connection to anchor-down in P and f(anchor)-down in Q.

    Monotonicity makes the restricted left map total into f(anchor)-down; a
    right adjoint of the restriction is attached when it exists.
    """
    if ac.left is None:
        raise ValueError("restrict_left needs a left adjoint")
    P, Q = ac.source, ac.target
    P.check_element(anchor)
    dn_p = down_set(P, anchor)
    dn_q = down_set(Q, ac.left.values[anchor])
    pos_q = {e: i for i, e in enumerate(dn_q.members)}
    rel = tuple(tuple(ac.conn.rel[a][b] for b in dn_q.members) for a in dn_p.members)
    conn = Connection(dn_p.view, dn_q.view, rel)
    left = MonotoneMap(dn_p.view, dn_q.view, tuple(pos_q[ac.left.values[a]] for a in dn_p.members))
    return AdjointConnection(conn, left, find_right_adjoint(conn))


@lru_cache(maxsize=None)
def _adjoint_connections_cached(P: FiniteLattice, Q: FiniteLattice) -> tuple[AdjointConnection, ...]:
    out = []
    for f in monotone_maps(P, Q):
        ac = left_adjoint_connection(f)
        if ac.right is not None:
            out.append(ac)
    return tuple(out)


def enumerate_adjoint_connections(P: FiniteLattice, Q: FiniteLattice) -> list[AdjointConnection]:
    """All adjoint connections P -> Q, ordered lexicographically by left map table.

    One entry per monotone map P -> Q whose connection also has a right
    adjoint; left- and right-adjointness are independent predicates and
    neither is assumed to imply the other.
    """
    return list(_adjoint_connections_cached(P, Q))


def enumerate_connections(P: FiniteLattice, Q: FiniteLattice) -> Iterator[Connection]:
    """Brute-force enumeration of every connection P -> Q.

    Visits every one of the 2^(|P|*|Q|) relations, in increasing order of the
    integer code whose bit x*|Q|+y records x R y, and yields those satisfying
    the weakening law.  Bounded to 24 relation bits.
    """
    n, m = P.size, Q.size
    if n * m > 24:
        raise SizeBoundExceeded(f"{n}x{m} relation space too large to enumerate")
    full = (1 << m) - 1
    up_masks = []
    for y in range(m):
        mask = 0
        for d in range(m):
            if Q.leq[y][d]:
                mask |= 1 << d
        up_masks.append(mask)
    upset_ok = bytearray(1 << m)
    for mask in range(1 << m):
        s, ok = mask, True
        while s:
            y = (s & -s).bit_length() - 1
            if up_masks[y] & ~mask:
                ok = False
                break
            s &= s - 1
        upset_ok[mask] = ok
    pairs = [(a, b) for a in range(n) for b in range(n) if a != b and P.leq[a][b]]
    for code in range(1 << (n * m)):
        rows = []
        tmp = code
        good = True
        for _ in range(n):
            r = tmp & full
            if not upset_ok[r]:
                good = False
                break
            rows.append(r)
            tmp >>= m
        if not good:
            continue
        if any(rows[b] & ~rows[a] for a, b in pairs):
            continue
        rel = tuple(tuple(bool(rows[x] >> y & 1) for y in range(m)) for x in range(n))
        yield Connection(P, Q, rel)
