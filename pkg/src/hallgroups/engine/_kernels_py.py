"""Pure numpy versions of the compiled kernels, same signatures."""
import numpy as np


def products(perms, base, weights, keys, a, b):
    a = np.asarray(a, dtype=np.int64)
    b = np.asarray(b, dtype=np.int64)
    img = perms[a][:, base]
    img = perms[b[:, None], img]
    key = img.astype(np.int64) @ weights
    return np.searchsorted(keys, key)


def closure(perms, base, weights, keys, gens, seed, cutoff):
    n = len(keys)
    cap = min(cutoff, n)
    seed = np.unique(np.asarray(seed, dtype=np.int64))
    if len(seed) > cap:
        return None
    gens = np.asarray(gens, dtype=np.int64)
    mask = np.zeros(n, dtype=bool)
    mask[seed] = True
    count = len(seed)
    frontier = seed
    while len(frontier) and len(gens):
        a = np.repeat(frontier, len(gens))
        b = np.tile(gens, len(frontier))
        new = products(perms, base, weights, keys, a, b)
        new = np.unique(new[~mask[new]])
        count += len(new)
        if count > cap:
            return None
        mask[new] = True
        frontier = new
    return np.flatnonzero(mask).astype(np.int64)
