"""Small shared numerics and determinism helpers."""

import hashlib

import numpy as np


def sigmoid(x):
    """Numerically stable logistic function, elementwise."""
    x = np.asarray(x, dtype=np.float64)
    out = np.empty_like(x)
    pos = x >= 0
    out[pos] = 1.0 / (1.0 + np.exp(-x[pos]))
    ex = np.exp(x[~pos])
    out[~pos] = ex / (1.0 + ex)
    return out


def logit(p):
    """Inverse of sigmoid; p must lie strictly inside (0, 1)."""
    p = np.asarray(p, dtype=np.float64)
    return np.log(p) - np.log1p(-p)


def clamp_probs(p, p_min):
    """Clip probabilities into [p_min, 1 - p_min]."""
    return np.clip(p, p_min, 1.0 - p_min)


def child_seed(seed, purpose, index=0):
    """Derive a named child seed from a master seed.

    Uses sha256 so the derivation is stable across processes and Python
    versions (the builtin hash() is salted per process).
    """
    digest = hashlib.sha256(f"{seed}:{purpose}:{index}".encode("utf-8")).digest()
    return int.from_bytes(digest[:8], "big") >> 1


def fmt_float(x):
    """Render a float with 17 significant digits (round-trip exact)."""
    return "%.17g" % float(x)
