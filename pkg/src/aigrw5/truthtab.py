"""Truth tables of up to 5 variables and exact NPN canonicalization.

A truth table is a plain Python int in [0, 2**32): bit m holds f(x0..x4)
where xi is bit i of the minterm index m.  Functions of fewer variables are
embedded with vacuous high variables (the low block replicated).

An NPN transform is a permutation of the 5 inputs, a 5-bit input phase mask
and an output phase.  The composition convention is::

    apply_transform(t, f) = g   with   g(x0..x4) = f(y0..y4) ^ t.output_phase
    where y[t.perm[i]] = x[i] ^ bit i of t.input_phase

Canonicalization returns the unsigned-smallest of all 7680 NPN variants of a
function together with a transform that maps the function onto it.  Ties are
broken by the smallest (perm, input_phase, output_phase) triple, so results
are reproducible across runs.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

MASK32 = 0xFFFFFFFF

# elementary table of variable i: bit m set iff bit i of m is set
ELEM = (0xAAAAAAAA, 0xCCCCCCCC, 0xF0F0F0F0, 0xFF00FF00, 0xFFFF0000)

_PERMS = tuple(itertools.permutations(range(5)))  # lexicographic order


def elementary(i: int) -> int:
    """Truth table of the single variable xi."""
    if not 0 <= i <= 4:
        raise ValueError(f"variable index out of range: {i}")
    return ELEM[i]


def tt_not(a: int) -> int:
    return a ^ MASK32


def tt_and(a: int, b: int) -> int:
    return a & b


def tt_xor(a: int, b: int) -> int:
    return a ^ b


def tt_hex(t: int) -> str:
    """8-digit lowercase hex form used in all file formats."""
    return format(t & MASK32, "08x")


def tt_from_hex(s: str) -> int:
    if len(s) != 8:
        raise ValueError(f"expected 8 hex digits, got {s!r}")
    return int(s, 16)


def lift_table(t: int, num_vars: int) -> int:
    """Embed a table of `num_vars` variables into 5 variables (vacuous high vars)."""
    if not 0 <= num_vars <= 5:
        raise ValueError(f"num_vars out of range: {num_vars}")
    width = 1 << num_vars
    if t >> width:
        raise ValueError("table wider than declared variable count")
    out = 0
    for r in range(32 // width):
        out |= t << (r * width)
    return out


@dataclass(frozen=True)
class NpnTransform:
    """Input permutation, input phase mask and output phase."""

    perm: tuple[int, int, int, int, int]
    input_phase: int
    output_phase: bool

    def __post_init__(self):
        if sorted(self.perm) != [0, 1, 2, 3, 4]:
            raise ValueError(f"perm is not a permutation of 0..4: {self.perm}")
        if not 0 <= self.input_phase < 32:
            raise ValueError(f"input_phase out of range: {self.input_phase}")

    @staticmethod
    def identity() -> "NpnTransform":
        return NpnTransform((0, 1, 2, 3, 4), 0, False)


IDENTITY = NpnTransform.identity()


def apply_transform(t: NpnTransform, f: int) -> int:
    """Apply an NPN transform to a truth table."""
    g = 0
    perm = t.perm
    phase = t.input_phase
    for m in range(32):
        mp = 0
        for i in range(5):
            if ((m >> i) ^ (phase >> i)) & 1:
                mp |= 1 << perm[i]
        if (f >> mp) & 1:
            g |= 1 << m
    return g ^ MASK32 if t.output_phase else g


def inverse(t: NpnTransform) -> NpnTransform:
    """Transform u with apply_transform(u, apply_transform(t, f)) == f for all f."""
    inv_perm = [0] * 5
    for i, p in enumerate(t.perm):
        inv_perm[p] = i
    phase = 0
    for i in range(5):
        if (t.input_phase >> i) & 1:
            phase |= 1 << t.perm[i]
    return NpnTransform(tuple(inv_perm), phase, t.output_phase)


class _NpnEngine:
    """Precomputed tables for fast evaluation of all 7680 NPN variants.

    For each of the 3840 (perm, input_phase) pairs the 32-bit word of the
    transformed table is assembled from 4 byte-indexed lookup tables, so one
    canonicalization costs a few numpy gathers instead of 7680 bit loops.
    Variant order is (perm lex, input_phase, output_phase), matching the
    documented tie-break.
    """

    def __init__(self):
        minterms = np.arange(32, dtype=np.uint32)
        bits = (minterms[:, None] >> np.arange(5)[None, :]) & 1  # (32, 5)
        phases = np.arange(32, dtype=np.uint32)
        phase_bits = (phases[:, None] >> np.arange(5)[None, :]) & 1  # (32, 5)

        # P[tf, m] = source minterm of bit m under transform tf
        perm_arr = np.array(_PERMS, dtype=np.uint32)  # (120, 5)
        x = bits[None, :, :] ^ phase_bits[:, None, :]  # (32 phases, 32 minterms, 5)
        p_all = np.empty((120, 32, 32), dtype=np.int64)
        for pi in range(120):
            shifts = (1 << perm_arr[pi]).astype(np.int64)
            p_all[pi] = (x.astype(np.int64) * shifts[None, None, :]).sum(axis=2)
        self.perm_of_tf = perm_arr
        p_flat = p_all.reshape(3840, 32)
        inv_p = np.argsort(p_flat, axis=1)  # rows are permutations of 0..31

        self.byte_tables = []
        byte_vals = np.arange(256, dtype=np.uint64)
        for k in range(4):
            shifts = inv_p[:, 8 * k : 8 * k + 8].astype(np.uint64)  # (3840, 8)
            tbl = np.zeros((3840, 256), dtype=np.uint64)
            for j in range(8):
                bit = (byte_vals >> np.uint64(j)) & np.uint64(1)  # (256,)
                tbl |= bit[None, :] * (np.uint64(1) << shifts[:, j : j + 1])
            self.byte_tables.append(tbl)

    def variant_values(self, f: int) -> np.ndarray:
        """All 7680 variant words, ordered (perm, input_phase, output_phase)."""
        t0, t1, t2, t3 = self.byte_tables
        v = (
            t0[:, f & 0xFF]
            | t1[:, (f >> 8) & 0xFF]
            | t2[:, (f >> 16) & 0xFF]
            | t3[:, (f >> 24) & 0xFF]
        )
        out = np.empty((3840, 2), dtype=np.uint64)
        out[:, 0] = v
        out[:, 1] = v ^ np.uint64(MASK32)
        return out.reshape(7680)

    def canonicalize(self, f: int) -> tuple[int, NpnTransform]:
        values = self.variant_values(f)
        idx = int(np.argmin(values))  # first occurrence = smallest triple
        canon = int(values[idx])
        tf, out_phase = idx >> 1, idx & 1
        perm = tuple(int(p) for p in _PERMS[tf >> 5])
        return canon, NpnTransform(perm, tf & 31, bool(out_phase))

    def canon_value(self, f: int) -> int:
        return int(self.variant_values(f).min())


_engine: _NpnEngine | None = None


def _get_engine() -> _NpnEngine:
    global _engine
    if _engine is None:
        _engine = _NpnEngine()
    return _engine


def canonicalize(f: int) -> tuple[int, NpnTransform]:
    """Canonical form of f and a transform t with apply_transform(t, f) == canon."""
    return _get_engine().canonicalize(f & MASK32)


def canon_value(f: int) -> int:
    """Canonical form only (cheaper when the transform is not needed)."""
    return _get_engine().canon_value(f & MASK32)


def count_npn_classes(
    num_vars: int,
    exhaustive: bool = False,
    sample_budget: int | None = None,
    seed: int = 0,
) -> int:
    """Number of distinct canonical forms over all functions of `num_vars` variables.

    Arities up to 4 are always enumerated exhaustively.  For 5 variables pass
    either exhaustive=True (full scan of all 2**32 tables, takes a long time)
    or a sample_budget, in which case the count of distinct classes seen in
    the sample is returned (a lower bound).
    """
    if not 1 <= num_vars <= 5:
        raise ValueError(f"num_vars out of range: {num_vars}")
    eng = _get_engine()
    if num_vars <= 4:
        width = 1 << num_vars
        seen = set()
        for t in range(1 << width):
            seen.add(eng.canon_value(lift_table(t, num_vars)))
        return len(seen)
    if exhaustive:
        return _count_npn5_exhaustive(eng)
    if sample_budget is None:
        raise ValueError("5-variable count needs exhaustive=True or a sample_budget")
    rng = np.random.default_rng(seed)
    seen = set()
    for t in rng.integers(0, 1 << 32, size=sample_budget, dtype=np.uint64):
        seen.add(eng.canon_value(int(t)))
    return len(seen)


def _count_npn5_exhaustive(eng: _NpnEngine) -> int:
    """Scan all 2**32 tables, marking whole classes off a shared bitset."""
    words = np.zeros(1 << 26, dtype=np.uint64)  # 2**32 bits
    full = np.uint64(0xFFFFFFFFFFFFFFFF)
    one = np.uint64(1)
    classes = 0
    w = 0
    n_words = words.shape[0]
    scan_chunk = 1 << 16
    while w < n_words:
        if words[w] == full:
            # vectorized skip over fully marked regions
            end = min(w + scan_chunk, n_words)
            hole = np.nonzero(words[w:end] != full)[0]
            if hole.size == 0:
                w = end
                continue
            w += int(hole[0])
        word = int(words[w])
        bit = 0
        while (word >> bit) & 1:
            bit += 1
        f = (w << 6) | bit  # smallest unmarked table = class representative
        classes += 1
        variants = np.unique(eng.variant_values(f))
        vw = (variants >> np.uint64(6)).astype(np.int64)
        vb = one << (variants & np.uint64(63))
        # combine duplicate word indices before the scatter
        boundaries = np.nonzero(np.diff(vw, prepend=-1))[0]
        merged = np.bitwise_or.reduceat(vb, boundaries)
        words[vw[boundaries]] |= merged
    return classes
