"""Evaluation set construction: members are rule-applicable training
units, non-members are held-out units, both length-filtered and
truncated the same way."""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from ..javasrc import parse
from ..transform import applicable

MAX_PER_SIDE = 1000
MIN_WORDS = 100
MAX_WORDS = 200


@dataclass(frozen=True)
class MIDataset:
    rule_id: int
    members: tuple
    nonmembers: tuple
    seed: int
    parameters: dict = field(default_factory=lambda: {
        "max_per_side": MAX_PER_SIDE, "min_words": MIN_WORDS,
        "max_words": MAX_WORDS})


def _long_enough(units):
    return [u for u in units if u.word_count > MIN_WORDS]


def build_dataset(train_pool, test_pool, rule_id, seed,
                  max_per_side=MAX_PER_SIDE):
    """Sample up to ``max_per_side`` rule-applicable training units as
    members and an equal number of held-out units as non-members.

    Both sides keep only units longer than 100 words and are stored
    truncated to their first 200 words.  Deterministic for a given seed.
    """
    train_units = sorted(_long_enough(train_pool), key=lambda u: u.id)
    test_units = sorted(_long_enough(test_pool), key=lambda u: u.id)
    candidates = [u for u in train_units if applicable(parse(u.text), rule_id)]
    if not candidates:
        raise ValueError(f"no applicable members for rule {rule_id}")
    rng = random.Random(seed)
    if len(candidates) > max_per_side:
        members = rng.sample(candidates, max_per_side)
    else:
        members = list(candidates)
    if len(test_units) < len(members):
        raise ValueError(
            f"test pool too small: need {len(members)}, have {len(test_units)}")
    nonmembers = rng.sample(test_units, len(members))
    return MIDataset(
        rule_id=rule_id,
        members=tuple(u.truncated(MAX_WORDS) for u in members),
        nonmembers=tuple(u.truncated(MAX_WORDS) for u in nonmembers),
        seed=seed,
    )
