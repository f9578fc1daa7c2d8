"""Deliberately naive group computations, used to cross-check the library."""


def _closure(table, ident, seeds):
    members = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for x in frontier:
            for s in seeds:
                y = table[x][s]
                if y not in members:
                    members.add(y)
                    nxt.append(y)
        frontier = nxt
    return members


def abelianization_invariants(table):
    """Invariant factors of G/[G,G], from a plain nested-list multiplication table."""
    n = len(table)
    ident = next(e for e in range(n) if all(table[e][x] == x for x in range(n)))
    inv = [next(y for y in range(n) if table[x][y] == ident) for x in range(n)]
    comms = {table[table[a][b]][table[inv[a]][inv[b]]] for a in range(n) for b in range(n)}
    derived = _closure(table, ident, sorted(comms))
    coset = {}
    reps = []
    for x in range(n):
        if x in coset:
            continue
        for d in derived:
            coset[table[x][d]] = len(reps)
        reps.append(x)
    m = len(reps)

    def qmul(i, j):
        return coset[table[reps[i]][reps[j]]]

    qident = coset[ident]
    orders = []
    for i in range(m):
        x, k = i, 1
        while x != qident:
            x, k = qmul(x, i), k + 1
        orders.append(k)
    # only 2-groups arise here; r_k = log2 #{x : x^(2^k) = 1}
    assert m & (m - 1) == 0, "expected a 2-group"
    ranks = [0]
    k = 1
    while 2 ** ranks[-1] < m:
        ranks.append(sum(1 for o in orders if (2**k) % o == 0).bit_length() - 1)
        k += 1
    at_least = [ranks[j] - ranks[j - 1] for j in range(1, len(ranks))]
    factors = []
    for j, c in enumerate(at_least):
        nxt = at_least[j + 1] if j + 1 < len(at_least) else 0
        factors += [2 ** (j + 1)] * (c - nxt)
    return tuple(sorted(factors))
