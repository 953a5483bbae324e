"""Compiled search kernels behind the census.

The census walks connected skeleton maps (arbitrary vertex degrees, e
edges, pairing fixed to d XOR 1) instead of divides: the medial of a
skeleton is automatically a connected checkerboard-colorable 4-valent
map with v = e double points, and every admissible divide with v >= 1
arises from exactly one skeleton up to isomorphism, reflection, and
duality (the black and the white regions give the two skeletons of a
divide).  So one canonical representative per skeleton orbit gives one
census entry per homeomorphism class of admissible divides.

Generation is a first-occurrence traversal with free choices: the next
dart in the current vertex cycle either closes the cycle, reuses a
pending dart (an odd dart whose even partner is placed), or opens a
fresh edge; a new vertex always continues from the smallest pending
dart, which forces connectivity and makes the dart labels canonical for
root 0.  A leaf survives iff no combination of root dart, orientation,
and duality yields a lexicographically smaller traversal word, so each
orbit is kept exactly once.  Leaf counts per edge level reproduce the
rooted-map counts 2, 10, 74, 706, 8162, ... which the tests pin down.

Every accepted skeleton is expanded in place: medial divide, circle
count, ambient genus, traced fiber boundary (the roundabout-and-band
spine of the medial), Heegaard bound, per-circle crossing parities, and
the divide-level canonical form (bit-identical to the pure Python
encoder, which the tests verify).  Failures of any re-verified identity
set a flag bit instead of raising, so the caller can report them.

Everything below is nopython-compiled; keep it free of Python objects.
"""

from __future__ import annotations

import numpy as np
from numba import njit

TOK_NONE = 0
TOK_CLOSE = 1
# token 2 + p extends with pending dart p; token 2 + 2e opens a fresh edge

KIND_ROOT = 0
KIND_EXTEND = 1
KIND_OPEN = 2
KIND_NEWCYCLE = 3

FLAG_BOUNDARY = 1
FLAG_HEEGAARD = 2
FLAG_ODD_CIRCLE = 4
FLAG_SELF_REVERSE = 8
FLAG_NEGATIVE_H = 16
FLAG_FIBER_CHI = 32

INV_COLS = 7  # v, c, ambient genus, faces, traced boundary, traced fiber chi, flags


@njit(cache=True)
def _build_ref(sigma, n, ref, written):
    """Traversal word of (sigma, root 0); labels equal darts because the
    generator places darts in first-occurrence order.  Returns length."""
    for d in range(n):
        written[d] = 0
    pos = 0
    start = 0
    while True:
        d = start
        while True:
            ref[pos] = d
            pos += 1
            written[d] = 1
            d = sigma[d]
            if d == start:
                break
        ref[pos] = -1
        pos += 1
        best = -1
        for cand in range(n):
            if written[cand] == 0:
                best = cand
                break
        if best == -1:
            return pos
        start = best


@njit(cache=True)
def _compare_traversal(rot, n, root, ref, reflen, label, written, stamp_arr):
    """Lexicographic comparison of the traversal word of (rot, root)
    against ref: -1 smaller, 0 equal, 1 larger.  Stamped scratch arrays
    avoid clearing."""
    stamp_arr[0] += 1
    stamp = stamp_arr[0]
    # label and written store (value, stamp) pairs so clearing is O(1)
    label[2 * root] = 0
    label[2 * root + 1] = stamp
    label[2 * (root ^ 1)] = 1
    label[2 * (root ^ 1) + 1] = stamp
    next_label = 2
    pos = 0
    start = root
    while True:
        d = start
        while True:
            if label[2 * d + 1] != stamp:
                label[2 * d] = next_label
                label[2 * d + 1] = stamp
                label[2 * (d ^ 1)] = next_label + 1
                label[2 * (d ^ 1) + 1] = stamp
                next_label += 2
            sym = label[2 * d]
            refsym = ref[pos]
            if sym != refsym:
                return -1 if sym < refsym else 1
            pos += 1
            written[2 * d + 1] = stamp
            d = rot[d]
            if d == start:
                break
        if ref[pos] != -1:
            return -1  # separator sorts below any label
        pos += 1
        best = -1
        bestlab = 1 << 30
        for cand in range(n):
            if label[2 * cand + 1] == stamp and written[2 * cand + 1] != stamp:
                if label[2 * cand] < bestlab:
                    bestlab = label[2 * cand]
                    best = cand
        if best == -1:
            return 0 if pos == reflen else (-1 if pos < reflen else 1)
        start = best


@njit(cache=True)
def _is_canonical(sigma, n, ref, reflen, rots, label, written, stamp_arr):
    """True iff no (variant, root) traversal word beats the reference.

    rots holds the four successor tables: identity, reflection, dual,
    reflected dual.  Every word starts with 0, so the second symbol
    (-1 for a monogon cycle, 1 when the partner follows, 2 otherwise)
    settles most roots without a full comparison.
    """
    r1 = ref[1]
    for var in range(4):
        rot = rots[var]
        for root in range(n):
            if var == 0 and root == 0:
                continue
            nb = rot[root]
            if nb == root:
                s1 = -1
            elif nb == (root ^ 1):
                s1 = 1
            else:
                s1 = 2
            if s1 > r1:
                continue
            if s1 < r1:
                return False
            cmp = _compare_traversal(rot, n, root, ref, reflen, label, written, stamp_arr)
            if cmp < 0:
                return False
    return True


@njit(cache=True)
def _medial(sigma, e, msucc, mpos):
    """Medial divide of the skeleton: one 4-valent vertex per edge.

    Skeleton corner (x, sigma x) becomes the medial edge with darts
    A(x) = 2x at the vertex of edge(x) and B(x) = 2x + 1 at the vertex
    of edge(sigma x); pairing stays d XOR 1.  Counterclockwise at the
    vertex of edge {2i, 2i+1}: A(2i), B(inv 2i), A(2i+1), B(inv 2i+1).
    """
    n = 2 * e
    inv = np.empty(n, dtype=np.int32)
    for d in range(n):
        inv[sigma[d]] = d
    for i in range(e):
        d0 = 2 * i
        d1 = 2 * i + 1
        a = 2 * d0
        b = 2 * inv[d0] + 1
        c = 2 * d1
        f = 2 * inv[d1] + 1
        msucc[a] = b
        msucc[b] = c
        msucc[c] = f
        msucc[f] = a
        mpos[a] = 0
        mpos[b] = 1
        mpos[c] = 2
        mpos[f] = 3


@njit(cache=True)
def _orbit_count(step, n, seen, stamp_arr):
    stamp_arr[0] += 1
    stamp = stamp_arr[0]
    count = 0
    for d in range(n):
        if seen[d] == stamp:
            continue
        count += 1
        x = d
        while seen[x] != stamp:
            seen[x] = stamp
            x = step[x]
    return count


@njit(cache=True)
def _circles(msucc, n, circle_id):
    """Circle index per medial dart via the go-straight rule; returns
    (circle count, self-reverse flag)."""
    step = np.empty(n, dtype=np.int32)
    for d in range(n):
        step[d] = msucc[msucc[d ^ 1]]
    orbit = np.full(n, -1, dtype=np.int32)
    norb = 0
    for d in range(n):
        if orbit[d] >= 0:
            continue
        x = d
        while orbit[x] < 0:
            orbit[x] = norb
            x = step[x]
        norb += 1
    first = np.full(norb, -1, dtype=np.int32)
    for d in range(n):
        if first[orbit[d]] < 0:
            first[orbit[d]] = d
    cid = np.full(norb, -1, dtype=np.int32)
    c = 0
    self_reverse = False
    for o in range(norb):
        if cid[o] >= 0:
            continue
        mate = orbit[first[o] ^ 1]
        if mate == o:
            self_reverse = True
        cid[o] = c
        cid[mate] = c
        c += 1
    for d in range(n):
        circle_id[d] = cid[orbit[d]]
    return c, self_reverse


@njit(cache=True)
def _spine_trace(msucc, mpos, n, stamp_arr):
    """Boundary components and Euler characteristic of the ribbon
    fiber, both read off the built roundabout-and-band spine (three
    darts per medial dart; the band foot side alternates with the
    rotation position parity) rather than from a formula."""
    ssucc = np.empty(3 * n, dtype=np.int32)
    spair = np.empty(3 * n, dtype=np.int32)
    for x in range(n):
        if mpos[x] & 1 == 0:
            ssucc[3 * x] = 3 * x + 1
            ssucc[3 * x + 1] = 3 * x + 2
            ssucc[3 * x + 2] = 3 * x
        else:
            ssucc[3 * x] = 3 * x + 2
            ssucc[3 * x + 2] = 3 * x + 1
            ssucc[3 * x + 1] = 3 * x
        spair[3 * x] = 3 * (x ^ 1)
        spair[3 * x + 1] = 3 * msucc[x] + 2
        spair[3 * msucc[x] + 2] = 3 * x + 1
    face = np.empty(3 * n, dtype=np.int32)
    for d in range(3 * n):
        face[d] = ssucc[spair[d]]
    seen = np.zeros(3 * n, dtype=np.int32)
    boundary = _orbit_count(face, 3 * n, seen, stamp_arr)
    verts = _orbit_count(ssucc, 3 * n, seen, stamp_arr)
    chi = verts - (3 * n) // 2
    return boundary, chi


@njit(cache=True)
def _encode_from_root(succ, n, root, order, new, out):
    """BFS relabeling from root (successor first, then pairing) and the
    flattened (succ', pair') table; mirrors the Python encoder."""
    for d in range(n):
        new[d] = -1
    new[root] = 0
    order[0] = root
    cnt = 1
    i = 0
    while i < cnt:
        d = order[i]
        i += 1
        nb = succ[d]
        if new[nb] < 0:
            new[nb] = cnt
            order[cnt] = nb
            cnt += 1
        nb = d ^ 1
        if new[nb] < 0:
            new[nb] = cnt
            order[cnt] = nb
            cnt += 1
    pos = 0
    for i in range(n):
        d = order[i]
        out[pos] = new[succ[d]]
        out[pos + 1] = new[d ^ 1]
        pos += 2


@njit(cache=True)
def _canonical_divide(msucc, n, best, work, order, new):
    """Minimal encoding over all roots and both orientations."""
    mpred = np.empty(n, dtype=np.int32)
    for d in range(n):
        mpred[msucc[d]] = d
    _encode_from_root(msucc, n, 0, order, new, best)
    for orient in range(2):
        succ = msucc if orient == 0 else mpred
        for root in range(n):
            if orient == 0 and root == 0:
                continue
            _encode_from_root(succ, n, root, order, new, work)
            smaller = False
            for i in range(2 * n):
                if work[i] != best[i]:
                    smaller = work[i] < best[i]
                    break
            if smaller:
                for i in range(2 * n):
                    best[i] = work[i]


@njit(cache=True)
def _process_leaf(sigma, e, canon_buf, inv_buf, count, label, written, stamp_arr, seen, ref, refscratch, rots):
    """Canonicality test and, on acceptance, the full census row."""
    n = 2 * e
    reflen = _build_ref(sigma, n, ref, refscratch)
    inv_sigma = rots[1]
    for d in range(n):
        inv_sigma[sigma[d]] = d
    for d in range(n):
        rots[0, d] = sigma[d]
        rots[2, d] = sigma[d ^ 1]
        rots[3, d] = inv_sigma[d] ^ 1
    if not _is_canonical(sigma, n, ref, reflen, rots, label, written, stamp_arr):
        return

    m = 4 * e
    msucc = np.empty(m, dtype=np.int32)
    mpos = np.empty(m, dtype=np.int32)
    _medial(sigma, e, msucc, mpos)

    circle_id = np.empty(m, dtype=np.int32)
    c, self_reverse = _circles(msucc, m, circle_id)

    face_step = np.empty(m, dtype=np.int32)
    for d in range(m):
        face_step[d] = msucc[d ^ 1]
    faces = _orbit_count(face_step, m, seen, stamp_arr)
    chi = e - 2 * e + faces
    genus = (2 - chi) // 2

    boundary, fiber_chi = _spine_trace(msucc, mpos, m, stamp_arr)

    flags = 0
    if boundary != 2 * c:
        flags |= FLAG_BOUNDARY
    if fiber_chi != -2 * e:
        flags |= FLAG_FIBER_CHI
    if e < genus:
        flags |= FLAG_HEEGAARD
    if self_reverse:
        flags |= FLAG_SELF_REVERSE
    if 1 + e - c < 0:
        flags |= FLAG_NEGATIVE_H
    crossings = np.zeros(c, dtype=np.int32)
    for i in range(e):
        crossings[circle_id[4 * i]] += 1
        crossings[circle_id[msucc[4 * i]]] += 1
    for i in range(c):
        if crossings[i] & 1:
            flags |= FLAG_ODD_CIRCLE

    row = count[0]
    canon_buf[row, 0] = m
    enc_best = np.empty(2 * m, dtype=np.int32)
    enc_work = np.empty(2 * m, dtype=np.int32)
    order = np.empty(m, dtype=np.int32)
    new = np.empty(m, dtype=np.int32)
    _canonical_divide(msucc, m, enc_best, enc_work, order, new)
    for i in range(2 * m):
        canon_buf[row, 1 + i] = enc_best[i]
    inv_buf[row, 0] = e
    inv_buf[row, 1] = c
    inv_buf[row, 2] = genus
    inv_buf[row, 3] = faces
    inv_buf[row, 4] = boundary
    inv_buf[row, 5] = fiber_chi
    inv_buf[row, 6] = flags
    count[0] = row + 1


@njit(cache=True)
def enumerate_level(e):
    """All census rows with exactly e double points.

    Returns (canon rows uint16 [k, 1+8e], invariant rows int32 [k, 6],
    leaf count).  Rows are in generation order; the caller sorts.
    """
    n = 2 * e
    cap = 1 << 12
    canon_buf = np.zeros((cap, 1 + 4 * n), dtype=np.uint16)
    inv_buf = np.zeros((cap, INV_COLS), dtype=np.int32)
    count = np.zeros(1, dtype=np.int64)
    leaves = 0

    sigma = np.full(n, -1, dtype=np.int32)
    pending = np.zeros(n, dtype=np.uint8)
    pending_count = 0
    opened = 0

    maxdepth = n + 2
    f_start = np.empty(maxdepth, dtype=np.int32)
    f_prev = np.empty(maxdepth, dtype=np.int32)
    f_kind = np.empty(maxdepth, dtype=np.int32)
    f_dart = np.empty(maxdepth, dtype=np.int32)
    f_setslot = np.empty(maxdepth, dtype=np.int32)
    f_token = np.empty(maxdepth, dtype=np.int32)

    # scratch for leaf processing
    label = np.zeros(2 * n, dtype=np.int32)
    written = np.zeros(2 * n, dtype=np.int32)
    stamp_arr = np.zeros(1, dtype=np.int64)
    seen = np.zeros(4 * e, dtype=np.int32)
    ref = np.empty(2 * n + 2, dtype=np.int32)
    refscratch = np.zeros(n, dtype=np.uint8)
    rots = np.empty((4, n), dtype=np.int32)

    OPEN_TOKEN = 2 + n

    # root frame: dart 0 opens edge 0 and starts vertex 0
    opened = 1
    pending[1] = 1
    pending_count = 1
    depth = 0
    f_start[0] = 0
    f_prev[0] = 0
    f_kind[0] = KIND_ROOT
    f_dart[0] = 0
    f_setslot[0] = -1
    f_token[0] = TOK_NONE

    while depth >= 0:
        # advance the token of the current frame
        t = f_token[depth]
        if t == TOK_NONE:
            nxt = TOK_CLOSE
        else:
            if t == TOK_CLOSE:
                p = 0
            else:
                p = t - 2 + 1
            nxt = 0
            while p < n:
                if pending[p]:
                    nxt = 2 + p
                    break
                p += 1
            if nxt == 0:
                if t < OPEN_TOKEN and opened < e:
                    nxt = OPEN_TOKEN
                else:
                    nxt = TOK_NONE
        if nxt == TOK_NONE:
            # pop: undo this frame's creating action
            kind = f_kind[depth]
            if kind == KIND_EXTEND:
                sigma[f_setslot[depth]] = -1
                pending[f_dart[depth]] = 1
                pending_count += 1
            elif kind == KIND_OPEN:
                sigma[f_setslot[depth]] = -1
                pending[f_dart[depth] ^ 1] = 0
                pending_count -= 1
                opened -= 1
            elif kind == KIND_NEWCYCLE:
                sigma[f_setslot[depth]] = -1
                pending[f_dart[depth]] = 1
                pending_count += 1
            depth -= 1
            continue
        f_token[depth] = nxt

        prev = f_prev[depth]
        if nxt == TOK_CLOSE:
            sigma[prev] = f_start[depth]
            if pending_count == 0:
                if opened == e:
                    leaves += 1
                    if count[0] == canon_buf.shape[0]:
                        newcap = canon_buf.shape[0] * 2
                        nc = np.zeros((newcap, canon_buf.shape[1]), dtype=np.uint16)
                        ni = np.zeros((newcap, INV_COLS), dtype=np.int32)
                        nc[: canon_buf.shape[0]] = canon_buf
                        ni[: inv_buf.shape[0]] = inv_buf
                        canon_buf = nc
                        inv_buf = ni
                    _process_leaf(sigma, e, canon_buf, inv_buf, count, label, written, stamp_arr, seen, ref, refscratch, rots)
                sigma[prev] = -1
                continue
            s = 0
            while not pending[s]:
                s += 1
            pending[s] = 0
            pending_count -= 1
            depth += 1
            f_start[depth] = s
            f_prev[depth] = s
            f_kind[depth] = KIND_NEWCYCLE
            f_dart[depth] = s
            f_setslot[depth] = prev
            f_token[depth] = TOK_NONE
        elif nxt == OPEN_TOKEN:
            d = 2 * opened
            opened += 1
            sigma[prev] = d
            pending[d ^ 1] = 1
            pending_count += 1
            depth += 1
            f_start[depth] = f_start[depth - 1]
            f_prev[depth] = d
            f_kind[depth] = KIND_OPEN
            f_dart[depth] = d
            f_setslot[depth] = prev
            f_token[depth] = TOK_NONE
        else:
            p = nxt - 2
            sigma[prev] = p
            pending[p] = 0
            pending_count -= 1
            depth += 1
            f_start[depth] = f_start[depth - 1]
            f_prev[depth] = p
            f_kind[depth] = KIND_EXTEND
            f_dart[depth] = p
            f_setslot[depth] = prev
            f_token[depth] = TOK_NONE

    k = count[0]
    return canon_buf[:k], inv_buf[:k], leaves
