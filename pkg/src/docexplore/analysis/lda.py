"""Topic modeling with latent Dirichlet allocation, collapsed Gibbs sampling.

The sampler is deliberately dependency-free: a fixed seed plus a fixed sweep
order (documents, then tokens in reading order) makes every fit bit-identical
across runs, which the serving layer relies on for reproducible deployments.
"""
from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from typing import Any, Sequence


class EmptyCorpus(Exception):
    """No documents, or no terms in any document."""


@dataclass(frozen=True)
class LdaConfig:
    k: int = 5
    alpha: float | None = None  # None -> 50/k
    beta: float = 0.01
    iterations: int = 500
    seed: int = 0

    def __post_init__(self):
        if self.k < 1:
            raise ValueError("k must be >= 1")
        if self.iterations < 1:
            raise ValueError("iterations must be >= 1")
        if self.alpha is not None and self.alpha <= 0:
            raise ValueError("alpha must be positive")
        if self.beta <= 0:
            raise ValueError("beta must be positive")

    @property
    def effective_alpha(self) -> float:
        return 50.0 / self.k if self.alpha is None else self.alpha


@dataclass(frozen=True)
class TopicModel:
    chapter_number: int
    k: int
    topics: tuple[dict[str, float], ...]  # each sums to 1
    doc_topic: tuple[float, ...]          # sums to 1
    config: LdaConfig
    log_likelihood: tuple[float, ...] = field(default=(), repr=False)

    def to_dict(self) -> dict[str, Any]:
        return {
            "chapter": self.chapter_number,
            "k": self.k,
            "topics": [dict(sorted(t.items())) for t in self.topics],
            "doc_topic": list(self.doc_topic),
            "config": {
                "k": self.config.k,
                "alpha": self.config.effective_alpha,
                "beta": self.config.beta,
                "iterations": self.config.iterations,
                "seed": self.config.seed,
            },
            "log_likelihood": list(self.log_likelihood),
        }


def fit_lda(
    docs: Sequence[Sequence[str]],
    config: LdaConfig = LdaConfig(),
    chapter_number: int = 0,
) -> TopicModel:
    """Fit a topic model on term-list documents (typically one per section)."""
    if not docs or all(len(d) == 0 for d in docs):
        raise EmptyCorpus("need at least one document with at least one term")

    vocab = sorted({term for doc in docs for term in doc})
    if not vocab or any(t == "" for t in vocab):
        raise EmptyCorpus("vocabulary is empty or contains empty terms")
    word_index = {term: i for i, term in enumerate(vocab)}

    k = config.k
    alpha = config.effective_alpha
    beta = config.beta
    v = len(vocab)
    v_beta = v * beta

    # Flattened corpus: document id and word id per token, reading order.
    doc_ids: list[int] = []
    word_ids: list[int] = []
    for d, doc in enumerate(docs):
        for term in doc:
            doc_ids.append(d)
            word_ids.append(word_index[term])
    n_tokens = len(word_ids)
    n_docs = len(docs)

    rng = random.Random(config.seed)
    z = [rng.randrange(k) for _ in range(n_tokens)]

    n_kw = [[0] * v for _ in range(k)]
    n_k = [0] * k
    n_dk = [[0] * k for _ in range(n_docs)]
    n_d = [0] * n_docs
    for i in range(n_tokens):
        t, d, w = z[i], doc_ids[i], word_ids[i]
        n_kw[t][w] += 1
        n_k[t] += 1
        n_dk[d][t] += 1
        n_d[d] += 1

    log_likelihood = []
    topic_range = range(k)
    for _ in range(config.iterations):
        for i in range(n_tokens):
            t = z[i]
            d = doc_ids[i]
            w = word_ids[i]
            n_kw[t][w] -= 1
            n_k[t] -= 1
            row = n_dk[d]
            row[t] -= 1

            # p(topic) ~ (n_dk + alpha) * (n_kw + beta) / (n_k + V*beta);
            # the per-document denominator is constant and cancels out.
            total = 0.0
            weights = []
            for t2 in topic_range:
                p = (row[t2] + alpha) * (n_kw[t2][w] + beta) / (n_k[t2] + v_beta)
                total += p
                weights.append(p)

            r = rng.random() * total
            acc = 0.0
            new_t = k - 1
            for t2 in topic_range:
                acc += weights[t2]
                if r < acc:
                    new_t = t2
                    break

            z[i] = new_t
            n_kw[new_t][w] += 1
            n_k[new_t] += 1
            row[new_t] += 1

        log_likelihood.append(
            _corpus_log_likelihood(doc_ids, word_ids, n_kw, n_k, n_dk, n_d, alpha, beta, v_beta, k)
        )

    topics = tuple(_normalize_topic(n_kw[t], beta) for t in range(k))
    named_topics = tuple(
        {vocab[w]: weights[w] for w in range(v)} for weights in topics
    )
    total_assigned = sum(n_k)
    doc_topic = tuple(
        (n_k[t] + alpha) / (total_assigned + k * alpha) for t in range(k)
    )
    return TopicModel(
        chapter_number=chapter_number,
        k=k,
        topics=named_topics,
        doc_topic=doc_topic,
        config=config,
        log_likelihood=tuple(log_likelihood),
    )


def _normalize_topic(counts: list[int], beta: float) -> list[float]:
    raw = [c + beta for c in counts]
    total = sum(raw)
    return [x / total for x in raw]


def _corpus_log_likelihood(doc_ids, word_ids, n_kw, n_k, n_dk, n_d, alpha, beta, v_beta, k):
    """log p(w) under the current point estimates of theta and phi."""
    ll = 0.0
    k_alpha = k * alpha
    for i in range(len(word_ids)):
        d = doc_ids[i]
        w = word_ids[i]
        row = n_dk[d]
        denom = n_d[d] + k_alpha
        p = 0.0
        for t in range(k):
            p += (row[t] + alpha) / denom * (n_kw[t][w] + beta) / (n_k[t] + v_beta)
        ll += math.log(p)
    return ll


def top_terms(model: TopicModel, topic_index: int, n: int) -> list[tuple[str, float]]:
    """Heaviest terms of one topic, descending weight, ties lexicographic."""
    if not 0 <= topic_index < model.k:
        raise IndexError(f"topic index {topic_index} out of range 0..{model.k - 1}")
    if n < 1:
        raise ValueError("n must be >= 1")
    entries = sorted(model.topics[topic_index].items(), key=lambda kv: (-kv[1], kv[0]))
    return entries[:n]


def dominant_topic(model: TopicModel, term: str) -> int | None:
    """The topic where a term carries its maximal weight (ties -> lowest id)."""
    best = None
    best_weight = -1.0
    for t in range(model.k):
        weight = model.topics[t].get(term)
        if weight is not None and weight > best_weight:
            best = t
            best_weight = weight
    return best
