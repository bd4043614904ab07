#!/usr/bin/env python3
"""Regenerates tests/data/baseline_golden.tsv with NLTK BLEU and rouge_score LCS.

Columns: kind, hypothesis, references (joined by " ||| "), bleu4, rouge_l.
kind is "sentence" or "corpus:<name>" (corpus rows list one pair per line and the
score is repeated on every line of the group).
"""
import random
import string
import sys

from nltk.translate.bleu_score import SmoothingFunction, corpus_bleu, sentence_bleu
from rouge_score.rouge_scorer import _score_lcs

VOCAB = ("what who which where when how many did does is was the a of in to "
         "river city film author born year team first second largest album "
         "band song country president war museum built founded named").split()
PUNCT = ["?", ",", "'s", "."]


def tokenize(text):
    out, cur = [], ""
    for ch in text:
        if ch in " \t\n\v\f\r":
            if cur:
                out.append(cur)
            cur = ""
        elif ch in string.punctuation:
            if cur:
                out.append(cur)
            cur = ""
            out.append(ch)
        else:
            cur += ch.lower() if ch.isascii() else ch
    if cur:
        out.append(cur)
    return out


def sentence(rng, lo, hi):
    words = [rng.choice(VOCAB) for _ in range(rng.randint(lo, hi))]
    if words and rng.random() < 0.5:
        words[0] = words[0].capitalize()
    text = " ".join(words)
    if rng.random() < 0.4:
        text += rng.choice(PUNCT)
    return text


def perturb(rng, text):
    words = text.split()
    for _ in range(rng.randint(0, 3)):
        op = rng.random()
        if op < 0.4 and words:
            words[rng.randrange(len(words))] = rng.choice(VOCAB)
        elif op < 0.7:
            words.insert(rng.randint(0, len(words)), rng.choice(VOCAB))
        elif words:
            del words[rng.randrange(len(words))]
    return " ".join(words)


def bleu(hyp, refs):
    h = tokenize(hyp)
    rs = [tokenize(r) for r in refs]
    return sentence_bleu(rs, h, smoothing_function=SmoothingFunction().method2)


def rouge(hyp, ref):
    return _score_lcs(tokenize(ref), tokenize(hyp)).fmeasure


def main(path):
    rng = random.Random(20240611)
    rows = []
    fixed = [
        ("Who wrote the novel?", ["Who wrote the novel?"]),
        ("", ["What is the capital?"]),
        ("the the the the", ["the cat sat on the mat"]),
        ("Which river flows through the city?", ["What river runs through the city?",
                                                 "Which river flows through that city?"]),
        ("banana", ["What is the capital?"]),
        ("the cat sat on the mat", ["the cat is on the mat"]),
    ]
    pairs = list(fixed)
    while len(pairs) < 50:
        ref = sentence(rng, 3, 14)
        hyp = perturb(rng, ref) if rng.random() < 0.8 else sentence(rng, 1, 12)
        refs = [ref] + ([perturb(rng, ref)] if rng.random() < 0.3 else [])
        pairs.append((hyp, refs))
    for hyp, refs in pairs:
        r = max(rouge(hyp, ref) for ref in refs)
        rows.append(("sentence", hyp, refs, bleu(hyp, refs), r))
    for g in range(3):
        group = pairs[5 + g * 10: 5 + (g + 1) * 10]
        score = corpus_bleu([[tokenize(r) for r in refs] for _, refs in group],
                            [tokenize(h) for h, _ in group],
                            smoothing_function=SmoothingFunction().method2)
        for hyp, refs in group:
            rows.append((f"corpus:{g}", hyp, refs, score, 0.0))
    with open(path, "w", encoding="utf-8") as fh:
        for kind, hyp, refs, b, r in rows:
            fh.write(f"{kind}\t{hyp}\t{' ||| '.join(refs)}\t{b!r}\t{r!r}\n")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "tests/data/baseline_golden.tsv")
