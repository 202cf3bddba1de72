"""Independent reference implementation used to generate test fixtures.

Pure-Python, sequential IEEE-754 double arithmetic throughout. Reduction
order is part of the contract and mirrors the library exactly:

  * any sum over a set-derived collection (cosines of an attribute set,
    per-target association scores, pooled permutation values) folds in
    ascending value order, so results are bit-stable under reordering of
    the input sets;
  * correlation sums fold over pairs sorted lexicographically by (x, y);
  * dot products and squared norms fold in component order.
"""

import itertools
import math


def fold_sum(values):
    """Left fold in the given order."""
    acc = 0.0
    for v in values:
        acc += v
    return acc


def sorted_fold_sum(values):
    return fold_sum(sorted(values))


def mean(values):
    return sorted_fold_sum(values) / len(values)


def cosine(u, v):
    assert len(u) == len(v)
    dot = 0.0
    su = 0.0
    sv = 0.0
    for a, b in zip(u, v):
        dot += a * b
    for a in u:
        su += a * a
    for b in v:
        sv += b * b
    c = dot / math.sqrt(su * sv)
    if c > 1.0:
        return 1.0
    if c < -1.0:
        return -1.0
    return c


def sum_sq_dev(values, m):
    ssd = 0.0
    for v in sorted(values):
        d = v - m
        ssd += d * d
    return ssd


def variance(values, mode):
    n = len(values)
    ssd = sum_sq_dev(values, mean(values))
    return ssd / n if mode == "population" else ssd / (n - 1)


def stddev(values, mode):
    return math.sqrt(variance(values, mode))


def association(w, A, B):
    ca = [cosine(w, a) for a in A]
    cb = [cosine(w, b) for b in B]
    return mean(ca) - mean(cb)


def sc_weat_effect_size(w, A, B, mode):
    ca = [cosine(w, a) for a in A]
    cb = [cosine(w, b) for b in B]
    return (mean(ca) - mean(cb)) / stddev(ca + cb, mode)


def weat_effect_size(X, Y, A, B, mode):
    sx = [association(x, A, B) for x in X]
    sy = [association(y, A, B) for y in Y]
    return (mean(sx) - mean(sy)) / stddev(sx + sy, mode)


def partition_stat(subset_sum, m1, m2, total):
    return subset_sum / m1 - (total - subset_sum) / m2


def exact_null_counts(pooled, m1):
    """Enumerate subsets of size m1 over the value-sorted pool; the subset is
    the first group of the partition. Returns (exceed, ties, partitions)
    against the observed partition, whose first group is pooled[:m1]."""
    n = len(pooled)
    m2 = n - m1
    pool = sorted(pooled)
    total = fold_sum(pool)
    s_obs = sorted_fold_sum(pooled[:m1])
    stat_obs = partition_stat(s_obs, m1, m2, total)
    exceed = 0
    ties = 0
    count = 0
    for comb in itertools.combinations(range(n), m1):
        s = 0.0
        for i in comb:
            s += pool[i]
        stat = partition_stat(s, m1, m2, total)
        if stat > stat_obs:
            exceed += 1
        elif stat == stat_obs:
            ties += 1
        count += 1
    return exceed, ties, count


def weat_pooled_scores(X, Y, A, B):
    return [association(x, A, B) for x in X] + [association(y, A, B) for y in Y]


def sc_weat_pooled_cosines(w, A, B):
    return [cosine(w, a) for a in A] + [cosine(w, b) for b in B]


def pearson(xs, ys):
    n = len(xs)
    pairs = sorted(zip(xs, ys))
    mx = fold_sum([p[0] for p in pairs]) / n
    my = fold_sum([p[1] for p in pairs]) / n
    sxy = 0.0
    sxx = 0.0
    syy = 0.0
    for x, y in pairs:
        sxy += (x - mx) * (y - my)
        sxx += (x - mx) * (x - mx)
        syy += (y - my) * (y - my)
    r = sxy / math.sqrt(sxx * syy)
    if r > 1.0:
        return 1.0
    if r < -1.0:
        return -1.0
    return r


def average_ranks(values):
    n = len(values)
    order = sorted(range(n), key=lambda i: values[i])
    ranks = [0.0] * n
    i = 0
    while i < n:
        j = i
        while j + 1 < n and values[order[j + 1]] == values[order[i]]:
            j += 1
        avg = (i + j) / 2.0 + 1.0
        for k in range(i, j + 1):
            ranks[order[k]] = avg
        i = j + 1
    return ranks


def spearman(xs, ys):
    return pearson(average_ranks(xs), average_ranks(ys))
