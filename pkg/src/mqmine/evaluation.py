"""Precision/recall scoring with exact binomial confidence intervals.

Sampling is uniform without replacement and reproducible from a seed.  A
predicted quantity matches a gold one when the standardized values and
canonical unit keys are equal and the spans overlap; properties additionally
require the normalized phrase to match for the same quantity.  Intervals are
Clopper-Pearson at 95%.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from decimal import Decimal
from typing import Callable, Sequence

from scipy.stats import beta

from .corpus import ExtractionRecord, GoldMQ, LabeledSentence, RecordMQ

__all__ = [
    "EvalReport",
    "SampleSizeError",
    "clopper_pearson",
    "has_mq",
    "has_number",
    "sample_sentences",
    "score",
]


class SampleSizeError(ValueError):
    pass


def has_number(sentence: LabeledSentence) -> bool:
    """Sampling predicate: the sentence contains a numeric value."""
    return any(c.isdigit() for c in sentence.text)


def has_mq(pipeline=None) -> Callable[[LabeledSentence], bool]:
    """Sampling predicate factory: the extractor finds a measured quantity.

    Results are cached per sentence text since populations are re-scanned.
    """
    from .corpus import Document, Pipeline

    pipe = pipeline or Pipeline.default()
    cache: dict[str, bool] = {}

    def predicate(sentence: LabeledSentence) -> bool:
        hit = cache.get(sentence.text)
        if hit is None:
            recs = pipe.run(Document(id="sample", text=sentence.text))
            hit = any(rec.mqs for rec in recs)
            cache[sentence.text] = hit
        return hit

    return predicate


@dataclass(frozen=True)
class EvalReport:
    extractor: str  # 'MQE' | 'MPE'
    n: int  # sentences scored
    tp: int
    fp: int
    fn: int
    precision: float | None
    recall: float | None
    precision_ci: tuple[float, float] | None
    recall_ci: tuple[float, float] | None

    def table(self) -> str:
        def fmt(x, ci):
            if x is None:
                return "undefined"
            return f"{x:.4f}  ({ci[0]:.4f}, {ci[1]:.4f})"

        lines = [
            f"Extractor : {self.extractor}",
            f"Sentences : {self.n}",
            f"tp/fp/fn  : {self.tp}/{self.fp}/{self.fn}",
            f"Precision : {fmt(self.precision, self.precision_ci)}",
            f"Recall    : {fmt(self.recall, self.recall_ci)}",
        ]
        return "\n".join(lines)


def clopper_pearson(k: int, n: int, alpha: float = 0.05) -> tuple[float, float]:
    """Exact binomial 95% (by default) interval for k successes out of n."""
    if not 0 <= k <= n or n <= 0:
        raise ValueError("need 0 <= k <= n with n > 0")
    lo = 0.0 if k == 0 else float(beta.ppf(alpha / 2, k, n - k + 1))
    hi = 1.0 if k == n else float(beta.ppf(1 - alpha / 2, k + 1, n - k))
    return lo, hi


def sample_sentences(
    sentences: Sequence[LabeledSentence],
    predicate: Callable[[LabeledSentence], bool],
    n: int,
    seed: int,
) -> list[LabeledSentence]:
    """Uniform sample without replacement from the predicate's population."""
    population = [s for s in sentences if predicate(s)]
    if len(population) < n:
        raise SampleSizeError(f"population {len(population)} smaller than sample size {n}")
    return random.Random(seed).sample(population, n)


def _spans_overlap(a: tuple[int, int], b: tuple[int, int]) -> bool:
    return max(a[0], b[0]) < min(a[1], b[1])


def _match_mqs(gold: Sequence[GoldMQ], pred: Sequence[RecordMQ]) -> list[tuple[int, int]]:
    """Greedy 1-1 matching on (value, unit key, overlapping span)."""
    pairs: list[tuple[int, int]] = []
    used: set[int] = set()
    for gi, g in enumerate(gold):
        gv = Decimal(g.value)
        for pi, p in enumerate(pred):
            if pi in used:
                continue
            if p.unit_key == g.unit_key and Decimal(p.value) == gv and _spans_overlap(p.span, g.span):
                pairs.append((gi, pi))
                used.add(pi)
                break
    return pairs


def score(
    gold: Sequence[LabeledSentence],
    predicted: Sequence[ExtractionRecord | None],
    mode: str = "MQ",
) -> EvalReport:
    """Score aligned gold sentences against pipeline output.

    ``predicted[i]`` is the record for ``gold[i]`` (None when the pipeline
    produced no extractions for the sentence).
    """
    if len(gold) != len(predicted):
        raise ValueError("gold and predicted must be aligned by sentence")
    if mode not in ("MQ", "MP"):
        raise ValueError("mode must be 'MQ' or 'MP'")
    tp = fp = fn = 0
    for ls, rec in zip(gold, predicted):
        pred_mqs = rec.mqs if rec is not None else ()
        pairs = _match_mqs(ls.gold_mqs, pred_mqs)
        if mode == "MQ":
            tp += len(pairs)
            fp += len(pred_mqs) - len(pairs)
            fn += len(ls.gold_mqs) - len(pairs)
            continue
        # MP: properties judged per matched quantity.
        props_by_mq = {}
        if rec is not None:
            for p in rec.properties:
                props_by_mq.setdefault(p.mq_index, p.text)
        matched_pred = {pi for _, pi in pairs}
        for _, pi in pairs:
            got = props_by_mq.get(pi)
            if ls.gold_property is None:
                if got is not None:
                    fp += 1
            elif got is None:
                fn += 1
            elif got == ls.gold_property:
                tp += 1
            else:
                fp += 1
                fn += 1
        # predicted properties on spurious quantities are false positives
        for pi, text in props_by_mq.items():
            if pi not in matched_pred and text is not None:
                fp += 1
        # gold property with no matched quantity at all cannot be recovered
        if ls.gold_property is not None and not pairs and ls.gold_mqs:
            fn += 1
    precision = tp / (tp + fp) if tp + fp else None
    recall = tp / (tp + fn) if tp + fn else None
    return EvalReport(
        extractor="MQE" if mode == "MQ" else "MPE",
        n=len(gold),
        tp=tp,
        fp=fp,
        fn=fn,
        precision=precision,
        recall=recall,
        precision_ci=clopper_pearson(tp, tp + fp) if tp + fp else None,
        recall_ci=clopper_pearson(tp, tp + fn) if tp + fn else None,
    )
