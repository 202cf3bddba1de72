#!/usr/bin/env python3
"""Generates the word-similarity and analogy fixtures plus their expected
results (fixtures/evalsuite/)."""

import json
import math
import os

import reference as ref

OUTDIR = os.path.join(os.path.dirname(__file__), "..", "fixtures", "evalsuite")


def fmt(x):
    return repr(float(x))


def write_embeddings(path, rows, dim):
    with open(path, "w") as f:
        f.write(f"{len(rows)} {dim}\n")
        for w, v in rows:
            f.write(w + " " + " ".join(fmt(x) for x in v) + "\n")


def parse_embeddings(path):
    out = {}
    order = []
    with open(path) as f:
        next(f)
        for line in f:
            parts = line.split()
            out[parts[0]] = [float(x) for x in parts[1:]]
            order.append(parts[0])
    return out, order


def main():
    os.makedirs(OUTDIR, exist_ok=True)

    # --- similarity -------------------------------------------------------
    sim_rows = [
        ("sun", [0.9, 0.2, 0.1]),
        ("moon", [0.8, 0.35, 0.05]),
        ("tree", [0.1, 0.9, 0.3]),
        ("leaf", [0.2, 0.85, 0.25]),
        ("car", [-0.6, 0.1, 0.8]),
        ("road", [-0.5, 0.25, 0.7]),
    ]
    emb_path = os.path.join(OUTDIR, "sim_embeddings.vec")
    write_embeddings(emb_path, sim_rows, 3)
    emb, _ = parse_embeddings(emb_path)

    pairs = [
        ("sun", "moon", 9.0),
        ("tree", "leaf", 8.0),
        ("car", "road", 7.5),
        ("sun", "tree", 2.0),
        ("moon", "car", 1.0),
        ("sun", "rocket", 5.0),  # rocket missing: skipped
    ]
    with open(os.path.join(OUTDIR, "sim_task.tsv"), "w") as f:
        f.write("word1\tword2\tscore\n")
        for a, b, s in pairs:
            f.write(f"{a}\t{b}\t{s}\n")

    cos = []
    human = []
    for a, b, s in pairs:
        if a in emb and b in emb:
            cos.append(ref.cosine(emb[a], emb[b]))
            human.append(s)
    expected_sim = {
        "n_scored": len(cos),
        "n_skipped_missing": len(pairs) - len(cos),
        "pearson_rho": ref.pearson(cos, human),
        "spearman_rho": ref.spearman(cos, human),
        "cosines": cos,
    }

    # --- analogy ----------------------------------------------------------
    # Vocabulary engineered so b - a + c is closest to the expected answer
    # for most questions, with one deliberate distractor win.
    ana_rows = [
        ("king", [0.95, 0.75, 0.10]),
        ("queen", [0.95, 0.15, 0.12]),
        ("man", [0.55, 0.78, 0.05]),
        ("woman", [0.55, 0.18, 0.07]),
        ("prince", [0.80, 0.72, 0.35]),
        ("princess", [0.82, 0.16, 0.33]),
        ("duke", [0.72, 0.70, 0.60]),
        ("regent", [0.93, 0.19, 0.09]),  # distractor near queen
    ]
    ana_emb_path = os.path.join(OUTDIR, "analogy_embeddings.vec")
    write_embeddings(ana_emb_path, ana_rows, 3)
    emb2, order2 = parse_embeddings(ana_emb_path)

    questions = [
        ("sem", "man", "king", "woman", "queen"),
        ("sem", "man", "prince", "woman", "princess"),
        ("sem", "king", "man", "queen", "woman"),
        ("sem", "prince", "duke", "princess", "duchess"),  # expected OOV: incorrect
        ("syn", "man", "woman", "king", "queen"),
        ("syn", "kings", "king", "queens", "queen"),       # query OOV: skipped
    ]
    with open(os.path.join(OUTDIR, "analogy_task.txt"), "w") as f:
        cur = None
        for sec, a, b, c, d in questions:
            if sec != cur:
                f.write(f": {sec}\n")
                cur = sec
            f.write(f"{a} {b} {c} {d}\n")

    sections = {}
    n_skipped = 0
    predictions = []
    for sec, a, b, c, d in questions:
        if a not in emb2 or b not in emb2 or c not in emb2:
            n_skipped += 1
            predictions.append((sec, a, b, c, d, None, None))
            continue
        va, vb, vc = emb2[a], emb2[b], emb2[c]
        target = [vb[i] - va[i] + vc[i] for i in range(3)]
        best = None
        best_cos = -math.inf
        for w in order2:
            if w in (a, b, c):
                continue
            cval = ref.cosine(target, emb2[w])
            if cval > best_cos:
                best_cos = cval
                best = w
        correct = best == d
        st = sections.setdefault(sec, {"n_scored": 0, "n_correct": 0})
        st["n_scored"] += 1
        st["n_correct"] += int(correct)
        predictions.append((sec, a, b, c, d, best, correct))

    n_scored = sum(s["n_scored"] for s in sections.values())
    n_correct = sum(s["n_correct"] for s in sections.values())
    expected_ana = {
        "n_scored": n_scored,
        "n_skipped_missing": n_skipped,
        "n_correct": n_correct,
        "accuracy": n_correct / n_scored,
        "sections": sections,
        "predictions": [
            {"section": s, "a": a, "b": b, "c": c, "expected": d,
             "predicted": p, "correct": k}
            for s, a, b, c, d, p, k in predictions
        ],
    }

    with open(os.path.join(OUTDIR, "expected.json"), "w") as f:
        json.dump({"similarity": expected_sim, "analogy": expected_ana}, f, indent=1)

    print(f"wrote {os.path.normpath(OUTDIR)}")
    print(f"  similarity: n={expected_sim['n_scored']} "
          f"pearson={expected_sim['pearson_rho']:.6f} "
          f"spearman={expected_sim['spearman_rho']:.6f}")
    print(f"  analogy: {n_correct}/{n_scored} correct, {n_skipped} skipped")
    for p in expected_ana["predictions"]:
        print(f"    {p['a']}:{p['b']} :: {p['c']}:{p['expected']} -> {p['predicted']}")


if __name__ == "__main__":
    main()
