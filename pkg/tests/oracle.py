"""Slow, dense reimplementations used as independent references in tests.

Nothing here imports the code paths it checks: counting is done by explicit
position enumeration, association by the direct formula on plain dicts, and
similarity by looping over every vocabulary word with dense numpy arrays.
"""
import math

import numpy as np

MORPHEME_TABLE = {
    "qo": ["qo"],
    "lw": ["lw"],
    "atomhe": ["ato", "mhe"],
    "lo": ["lo"],
    "telowi": ["te", "lo", "wi"],
    "atmhe": ["at", "mhe"],
    "li": ["li"],
    "teli": ["te", "li"],
    "qowi": ["qo", "wi"],
    "lowi": ["lo", "wi"],
    "lebkwi": ["lebk", "wi"],
}


def tokenize(raw, sep=":", sentinel="XXXX", rules=MORPHEME_TABLE):
    texts, cur = [], []
    for tok in raw.replace("\n", sep).split(sep):
        tok = tok.strip()
        if not tok:
            continue
        if tok == sentinel:
            if cur:
                texts.append(cur)
            cur = []
        else:
            cur.extend(rules.get(tok, [tok]))
    if cur:
        texts.append(cur)
    return texts


def word_counts(texts):
    words = [w for t in texts for w in t]
    return {w: words.count(w) for w in set(words)}, len(words)


def pair_counts(texts, d):
    counts, total = {}, 0
    for t in texts:
        for i in range(len(t)):
            for j in range(len(t)):
                if j - i == d:
                    key = tuple(sorted((t[i], t[j])))
                    counts[key] = counts.get(key, 0) + 1
                    total += 1
    return counts, total


def mi(texts, d, mode="weighted"):
    wc, n = word_counts(texts)
    pc, m = pair_counts(texts, d)
    out = {}
    for (x, y), c in pc.items():
        q = c / m
        v = math.log2(q / ((wc[x] / n) * (wc[y] / n)))
        out[(x, y)] = q * v if mode == "weighted" else v
    return out


def dense(values, words):
    idx = {w: k for k, w in enumerate(words)}
    a = np.zeros((len(words), len(words)))
    for (x, y), v in values.items():
        a[idx[x], idx[y]] = a[idx[y], idx[x]] = v
    return a


def dense_blend(m1, m2, w, words):
    return np.hypot(dense(m1, words), w * dense(m2, words))


def dense_similarity(B, i, j, normalize=True):
    terms, support = [], 0
    for z in range(B.shape[0]):
        if z == i or z == j:
            continue
        a, b = float(B[i, z]), float(B[j, z])
        if a == 0.0 and b == 0.0:
            continue
        support += 1
        terms.append(2.0 * a * b / (a * a + b * b))
    if support == 0:
        return 0.0
    total = math.fsum(terms)
    return total / support if normalize else total


def dense_rank(B, words, counts, min_count=3, cutoff=0.95):
    rows = []
    n = len(words)
    for i in range(n):
        for j in range(n):
            if not words[i] < words[j]:
                continue
            if counts[words[i]] < min_count or counts[words[j]] < min_count:
                continue
            s = dense_similarity(B, i, j)
            if s >= cutoff:
                rows.append((words[i], words[j], s))
    rows.sort(key=lambda r: (-r[2], r[0], r[1]))
    return rows


def pipeline_rows(raw, w=0.75, min_count=3, cutoff=0.95):
    """Full from-scratch ranking of a raw corpus stream."""
    texts = tokenize(raw)
    wc, _ = word_counts(texts)
    words = sorted(wc)
    B = dense_blend(mi(texts, 1), mi(texts, 2), w, words)
    return dense_rank(B, words, wc, min_count, cutoff), wc


def report_lines(rows, wc, lexicon):
    lines = ["rank\tword1\tword2\tgloss1\tgloss2\tsimilarity\tcount1\tcount2"]
    for k, (a, b, s) in enumerate(rows, 1):
        lines.append(f"{k}\t{a}\t{b}\t{lexicon.get(a, '?')}\t{lexicon.get(b, '?')}"
                     f"\t{s:.6f}\t{wc[a]}\t{wc[b]}")
    return lines


def mean_anchor_similarity(raw, anchors, w):
    texts = tokenize(raw)
    wc, _ = word_counts(texts)
    words = sorted(wc)
    B = dense_blend(mi(texts, 1), mi(texts, 2), w, words)
    idx = {x: k for k, x in enumerate(words)}
    return math.fsum(dense_similarity(B, idx[a], idx[b]) for a, b in anchors) / len(anchors)
