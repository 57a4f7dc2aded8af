"""Discussion-thread data model and its JSON file format.

A thread is a rank-ordered sequence of messages over a message frame whose
hypotheses are the ways a post can relate to the discussion: off-topic,
senseless, or about one of N named topics (one of which is the relevant
one; the others are controversy bait).
"""

from __future__ import annotations

import json
import os
from collections.abc import Mapping
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

from .belief import Frame, MassFunction
from .errors import InvalidThread, RankOutOfBounds, UnknownUser

__all__ = [
    "OFF_TOPIC",
    "SENSELESS",
    "topic_label",
    "MessageFrame",
    "Message",
    "Thread",
    "thread_from_dict",
    "thread_to_dict",
    "load_thread",
    "save_thread",
]

OFF_TOPIC = "Off-topic"
SENSELESS = "Senseless"


def topic_label(index: int) -> str:
    return f"Topic_{index}"


@dataclass(frozen=True)
class MessageFrame:
    """Frame for message evidence: Off-topic, Senseless, and N topics.

    ``relevant_topic`` names the topic the thread is actually about; every
    other topic counts as a controversy topic.
    """

    topic_count: int
    relevant_topic: int
    _frame: Frame = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.topic_count < 1:
            raise InvalidThread(f"topic_count must be >= 1, got {self.topic_count}")
        if self.topic_count > 14:
            raise InvalidThread(
                f"topic_count {self.topic_count} exceeds 14 (frame capped at 16)"
            )
        if not 1 <= self.relevant_topic <= self.topic_count:
            raise InvalidThread(
                f"relevant_topic {self.relevant_topic} outside 1..{self.topic_count}"
            )
        labels = [OFF_TOPIC, SENSELESS]
        labels += [topic_label(j) for j in range(1, self.topic_count + 1)]
        object.__setattr__(self, "_frame", Frame(labels))

    @property
    def frame(self) -> Frame:
        return self._frame

    def off_topic_set(self) -> int:
        return self._frame.singleton(OFF_TOPIC)

    def senseless_set(self) -> int:
        return self._frame.singleton(SENSELESS)

    def topic_set(self, index: int) -> int:
        if not 1 <= index <= self.topic_count:
            raise InvalidThread(f"topic {index} outside 1..{self.topic_count}")
        return self._frame.singleton(topic_label(index))

    def relevant_set(self) -> int:
        return self.topic_set(self.relevant_topic)

    def controversy_topics(self) -> tuple[int, ...]:
        return tuple(
            j for j in range(1, self.topic_count + 1) if j != self.relevant_topic
        )


@dataclass(frozen=True)
class Message:
    """One post: author, 1-based thread position, and its evidence."""

    author: str
    rank: int
    bba: MassFunction


@dataclass(frozen=True)
class Thread:
    """A validated discussion thread.

    Ranks must be exactly 1..M, every author must be on the roster, every
    roster user must post at least once, and the roster needs at least two
    users (conflict is measured against *other* users).
    """

    frame: MessageFrame
    users: tuple[str, ...]
    messages: tuple[Message, ...]

    def __post_init__(self):
        users = tuple(self.users)
        if len(users) < 2:
            raise InvalidThread("a thread needs at least two users")
        if len(set(users)) != len(users):
            raise InvalidThread("duplicate user ids in roster")
        messages = tuple(sorted(self.messages, key=lambda m: m.rank))
        ranks = [m.rank for m in messages]
        if ranks != list(range(1, len(messages) + 1)):
            raise InvalidThread(
                f"ranks must be exactly 1..{len(messages)} with no gaps, got {ranks}"
            )
        roster = set(users)
        posted = set()
        for msg in messages:
            if msg.author not in roster:
                raise InvalidThread(f"author {msg.author!r} is not on the roster")
            if msg.bba.frame != self.frame.frame:
                raise InvalidThread(
                    f"message {msg.rank} uses a different frame than the thread"
                )
            posted.add(msg.author)
        silent = roster - posted
        if silent:
            raise InvalidThread(f"users with no messages: {sorted(silent)}")
        object.__setattr__(self, "users", users)
        object.__setattr__(self, "messages", messages)

    def message(self, rank: int) -> Message:
        if not 1 <= rank <= len(self.messages):
            raise RankOutOfBounds(f"rank {rank} outside 1..{len(self.messages)}")
        return self.messages[rank - 1]

    def ranks_by(self, user: str) -> tuple[int, ...]:
        if user not in self.users:
            raise UnknownUser(f"{user!r} is not on the roster")
        return tuple(m.rank for m in self.messages if m.author == user)


def _expect(condition: bool, message: str) -> None:
    if not condition:
        raise InvalidThread(message)


def thread_from_dict(data: Mapping[str, Any]) -> Thread:
    """Build a thread from its JSON object form.

    Unknown top-level keys (such as simulator metadata) are ignored.
    """
    _expect(isinstance(data, Mapping), "thread document must be a JSON object")
    for key in ("topic_count", "relevant_topic", "users", "messages"):
        _expect(key in data, f"missing key {key!r}")
    _expect(
        isinstance(data["topic_count"], int) and not isinstance(data["topic_count"], bool),
        "topic_count must be an integer",
    )
    _expect(
        isinstance(data["relevant_topic"], int)
        and not isinstance(data["relevant_topic"], bool),
        "relevant_topic must be an integer",
    )
    frame = MessageFrame(
        topic_count=data["topic_count"], relevant_topic=data["relevant_topic"]
    )
    users = data["users"]
    _expect(
        isinstance(users, list) and all(isinstance(u, str) for u in users),
        "users must be a list of strings",
    )
    raw_messages = data["messages"]
    _expect(isinstance(raw_messages, list), "messages must be a list")
    messages = []
    for i, raw in enumerate(raw_messages):
        _expect(isinstance(raw, Mapping), f"message {i} must be an object")
        for key in ("rank", "author", "bba"):
            _expect(key in raw, f"message {i} missing key {key!r}")
        rank, author, bba = raw["rank"], raw["author"], raw["bba"]
        _expect(
            isinstance(rank, int) and not isinstance(rank, bool),
            f"message {i}: rank must be an integer",
        )
        _expect(isinstance(author, str), f"message {i}: author must be a string")
        _expect(isinstance(bba, list), f"message {i}: bba must be a list")
        assignments = []
        for j, entry in enumerate(bba):
            _expect(
                isinstance(entry, Mapping) and "set" in entry and "mass" in entry,
                f"message {i}: bba entry {j} must have 'set' and 'mass'",
            )
            labels = entry["set"]
            _expect(
                isinstance(labels, list) and all(isinstance(x, str) for x in labels),
                f"message {i}: bba entry {j}: 'set' must be a list of strings",
            )
            mass = entry["mass"]
            _expect(
                isinstance(mass, (int, float)) and not isinstance(mass, bool),
                f"message {i}: bba entry {j}: 'mass' must be a number",
            )
            assignments.append((frame.frame.subset(labels), float(mass)))
        messages.append(
            Message(author=author, rank=rank, bba=MassFunction(frame.frame, assignments))
        )
    return Thread(frame=frame, users=tuple(users), messages=tuple(messages))


def thread_to_dict(thread: Thread) -> dict[str, Any]:
    """JSON object form of a thread (masses keep full float precision)."""
    return {
        "topic_count": thread.frame.topic_count,
        "relevant_topic": thread.frame.relevant_topic,
        "users": list(thread.users),
        "messages": [
            {
                "rank": msg.rank,
                "author": msg.author,
                "bba": [
                    {"set": list(thread.frame.frame.members(s)), "mass": m}
                    for s, m in msg.bba.items()
                ],
            }
            for msg in thread.messages
        ],
    }


def load_thread(path: str | Path) -> Thread:
    with open(path, encoding="utf-8") as fh:
        return thread_from_dict(json.load(fh))


def save_thread(thread: Thread, path: str | Path, meta: dict[str, Any] | None = None) -> None:
    """Write a thread file atomically (temp file + rename)."""
    document = thread_to_dict(thread)
    if meta:
        document["meta"] = meta
    write_json_atomic(document, path)


def write_json_atomic(document: Any, path: str | Path) -> None:
    path = Path(path)
    tmp = path.with_name(path.name + ".tmp")
    try:
        with open(tmp, "w", encoding="utf-8") as fh:
            json.dump(document, fh, indent=2)
            fh.write("\n")
        os.replace(tmp, path)
    finally:
        if tmp.exists():
            tmp.unlink()
