"""Conflict aggregation over a thread and the troll/other partition.

Three levels of aggregation:

* a message against one other user: mean conflict with that user's
  earlier messages;
* a message against everyone else: mean over the other users, weighted by
  how many earlier messages each contributed (a message with no earlier
  messages from other users scores 0);
* a user: plain mean over all of the user's messages, unopposed first
  posts included in the divisor.

``analyze`` runs all three, clusters the per-user scores into two groups
and labels the higher-centered group as trolls.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import fsum
from typing import Any

from .clustering import kmeans2
from .conflict import conflict
from .errors import NoPriorMessages, SameUser, UnknownUser
from .thread import Thread

__all__ = [
    "ConflictReport",
    "message_conflict_per_user",
    "message_conflict",
    "user_conflict",
    "analyze",
]


@dataclass(frozen=True)
class ConflictReport:
    """Everything the detection run produced.

    ``per_message`` is indexed by rank minus one; ``per_user`` preserves
    roster order.  ``trolls`` is the cluster with the higher center.
    """

    per_message: tuple[float, ...]
    per_user: dict[str, float]
    trolls: frozenset[str]
    others: frozenset[str]
    troll_center: float
    other_center: float

    def to_dict(self) -> dict[str, Any]:
        roster = list(self.per_user)
        return {
            "per_message": list(self.per_message),
            "per_user": dict(self.per_user),
            "trolls": [u for u in roster if u in self.trolls],
            "others": [u for u in roster if u in self.others],
            "centers": {"trolls": self.troll_center, "others": self.other_center},
        }


def message_conflict_per_user(thread: Thread, rank: int, user: str) -> float:
    """Mean conflict between the message at ``rank`` and the earlier
    messages of one other user."""
    msg = thread.message(rank)
    if user not in thread.users:
        raise UnknownUser(f"{user!r} is not on the roster")
    if user == msg.author:
        raise SameUser(f"message {rank} belongs to {user!r}")
    priors = [m for m in thread.messages[: rank - 1] if m.author == user]
    if not priors:
        raise NoPriorMessages(f"{user!r} has no messages before rank {rank}")
    return fsum(conflict(msg.bba, p.bba) for p in priors) / len(priors)


def message_conflict(thread: Thread, rank: int) -> float:
    """Conflict of the message at ``rank`` against all earlier messages by
    other users, weighted per user by how many of those messages they posted.

    Returns 0 for a message with no earlier messages from other users.
    """
    msg = thread.message(rank)
    prior_total = sum(
        1 for m in thread.messages[: rank - 1] if m.author != msg.author
    )
    if prior_total == 0:
        return 0.0
    result = 0.0
    for user in thread.users:
        if user == msg.author:
            continue
        prior_count = sum(
            1 for m in thread.messages[: rank - 1] if m.author == user
        )
        if prior_count == 0:
            continue
        weight = prior_count / prior_total
        result += weight * message_conflict_per_user(thread, rank, user)
    return result


def user_conflict(thread: Thread, user: str) -> float:
    """Mean conflict over all of a user's messages."""
    ranks = thread.ranks_by(user)
    return fsum(message_conflict(thread, r) for r in ranks) / len(ranks)


def analyze(thread: Thread) -> ConflictReport:
    """Score every message and user, then split users into trolls and others.

    Deterministic: messages are processed in rank order and users in
    roster order.  Propagates :class:`~trolldetect.errors.Degenerate` when
    the per-user scores cannot be split (for example, all identical).
    """
    per_message = tuple(
        message_conflict(thread, rank) for rank in range(1, len(thread.messages) + 1)
    )
    per_user = {}
    for user in thread.users:
        ranks = thread.ranks_by(user)
        per_user[user] = fsum(per_message[r - 1] for r in ranks) / len(ranks)
    split = kmeans2(per_user)
    return ConflictReport(
        per_message=per_message,
        per_user=per_user,
        trolls=split.high,
        others=split.low,
        troll_center=split.center_high,
        other_center=split.center_low,
    )
