"""Synthetic discussion threads with scripted user behavior.

A scenario lists the users (with descriptive roles), a message script
(who posts, and whether the post is relevant, off-topic, senseless or
about a controversy topic) and a seed.  Each generated message carries a
two-focal bba: a dominant mass on the scripted category's singleton,
drawn uniformly from the concentration range, and the remainder on the
whole frame as residual ignorance.  Specific ranks can have their
dominant mass pinned to exact values, which is how the published example
threads are reproduced.
"""

from __future__ import annotations

import random
from collections.abc import Iterable
from dataclasses import dataclass, field, replace
from typing import Any

from .belief import MassFunction
from .errors import InvalidSpec, MassOutOfRange, RankOutOfBounds
from .thread import Message, MessageFrame, Thread

__all__ = [
    "GENERATOR_ID",
    "ROLES",
    "CATEGORIES",
    "ScriptEntry",
    "ScenarioSpec",
    "pin_masses",
    "generate",
    "spec_from_dict",
    "spec_to_dict",
    "example1",
    "example2",
    "BUILTIN_SCENARIOS",
]

# Recorded in emitted thread files; dominant masses are only reproducible
# from (seed, spec) when drawn with the same generator.
GENERATOR_ID = "python-random-mt19937"

ROLES = frozenset({"expert", "troll", "victim", "learner"})
CATEGORIES = frozenset({"relevant", "off_topic", "senseless", "controversy"})

DEFAULT_CONCENTRATION = (0.75, 0.98)


@dataclass(frozen=True)
class ScriptEntry:
    """One scripted post.  ``topic`` is required for (and only for) the
    controversy category."""

    author: str
    category: str
    topic: int | None = None


@dataclass(frozen=True)
class ScenarioSpec:
    """A complete recipe for one synthetic thread."""

    topic_count: int
    relevant_topic: int
    users: tuple[tuple[str, str], ...]  # (id, role)
    script: tuple[ScriptEntry, ...]
    seed: int = 0
    concentration: tuple[float, float] = DEFAULT_CONCENTRATION
    pins: dict[int, float] = field(default_factory=dict)  # rank -> dominant mass

    def user_ids(self) -> tuple[str, ...]:
        return tuple(uid for uid, _ in self.users)


def _validate(spec: ScenarioSpec) -> MessageFrame:
    try:
        frame = MessageFrame(
            topic_count=spec.topic_count, relevant_topic=spec.relevant_topic
        )
    except Exception as exc:
        raise InvalidSpec(str(exc)) from None
    if not isinstance(spec.seed, int) or isinstance(spec.seed, bool):
        raise InvalidSpec(f"seed must be an integer, got {spec.seed!r}")
    ids = spec.user_ids()
    if len(ids) < 2:
        raise InvalidSpec("a scenario needs at least two users")
    if len(set(ids)) != len(ids):
        raise InvalidSpec("duplicate user ids")
    for uid, role in spec.users:
        if role not in ROLES:
            raise InvalidSpec(f"unknown role {role!r} for {uid!r}")
    if not spec.script:
        raise InvalidSpec("empty script")
    known = set(ids)
    authors = set()
    for i, entry in enumerate(spec.script):
        if entry.author not in known:
            raise InvalidSpec(f"script entry {i}: unknown author {entry.author!r}")
        if entry.category not in CATEGORIES:
            raise InvalidSpec(f"script entry {i}: unknown category {entry.category!r}")
        if entry.category == "controversy":
            if entry.topic is None:
                raise InvalidSpec(f"script entry {i}: controversy needs a topic")
            if not 1 <= entry.topic <= spec.topic_count:
                raise InvalidSpec(
                    f"script entry {i}: topic {entry.topic} outside "
                    f"1..{spec.topic_count}"
                )
            if entry.topic == spec.relevant_topic:
                raise InvalidSpec(
                    f"script entry {i}: controversy topic equals the relevant topic"
                )
        elif entry.topic is not None:
            raise InvalidSpec(
                f"script entry {i}: topic only applies to controversy entries"
            )
        authors.add(entry.author)
    silent = known - authors
    if silent:
        raise InvalidSpec(f"users never post: {sorted(silent)}")
    if len(spec.concentration) != 2:
        raise InvalidSpec("concentration must be a (lo, hi) pair")
    lo, hi = spec.concentration
    if not (0.5 < lo < hi < 1.0):
        raise InvalidSpec(
            f"concentration must satisfy 0.5 < lo < hi < 1, got ({lo}, {hi})"
        )
    for rank, mass in spec.pins.items():
        _check_pin(rank, mass, len(spec.script))
    return frame


def _check_pin(rank: int, mass: float, script_length: int) -> None:
    if not 1 <= rank <= script_length:
        raise RankOutOfBounds(f"pinned rank {rank} outside 1..{script_length}")
    # 1.0 is rejected on purpose: every generated bba keeps two focal
    # elements, so the ignorance remainder must stay positive.
    if not 0.0 < mass < 1.0:
        raise MassOutOfRange(f"pinned mass {mass!r} outside (0, 1)")


def pin_masses(
    spec: ScenarioSpec, overrides: Iterable[tuple[int, float]]
) -> ScenarioSpec:
    """A copy of the scenario with given ranks' dominant masses fixed."""
    pins = dict(spec.pins)
    for rank, mass in overrides:
        _check_pin(rank, mass, len(spec.script))
        pins[rank] = mass
    return replace(spec, pins=pins)


def _category_set(frame: MessageFrame, entry: ScriptEntry) -> int:
    if entry.category == "relevant":
        return frame.relevant_set()
    if entry.category == "off_topic":
        return frame.off_topic_set()
    if entry.category == "senseless":
        return frame.senseless_set()
    return frame.topic_set(entry.topic)


def generate(spec: ScenarioSpec) -> Thread:
    """Deterministically expand a scenario into a thread.

    Dominant masses are drawn for every rank in script order, so pinning
    one rank never shifts the values sampled for the others.
    """
    frame = _validate(spec)
    lo, hi = spec.concentration
    rng = random.Random(spec.seed)
    messages = []
    for rank, entry in enumerate(spec.script, start=1):
        dominant = rng.uniform(lo, hi)
        dominant = spec.pins.get(rank, dominant)
        focal = _category_set(frame, entry)
        bba = MassFunction(
            frame.frame, {focal: dominant, frame.frame.full_set: 1.0 - dominant}
        )
        messages.append(Message(author=entry.author, rank=rank, bba=bba))
    return Thread(frame=frame, users=spec.user_ids(), messages=tuple(messages))


def spec_to_dict(spec: ScenarioSpec) -> dict[str, Any]:
    return {
        "topic_count": spec.topic_count,
        "relevant_topic": spec.relevant_topic,
        "seed": spec.seed,
        "concentration": list(spec.concentration),
        "users": [{"id": uid, "role": role} for uid, role in spec.users],
        "script": [
            {"author": e.author, "category": e.category}
            | ({"topic": e.topic} if e.topic is not None else {})
            for e in spec.script
        ],
        "pins": [{"rank": r, "mass": m} for r, m in sorted(spec.pins.items())],
    }


def spec_from_dict(data: dict[str, Any]) -> ScenarioSpec:
    try:
        users = tuple((u["id"], u["role"]) for u in data["users"])
        script = tuple(
            ScriptEntry(
                author=e["author"], category=e["category"], topic=e.get("topic")
            )
            for e in data["script"]
        )
        concentration = tuple(data.get("concentration", DEFAULT_CONCENTRATION))
        pins = {p["rank"]: p["mass"] for p in data.get("pins", [])}
        spec = ScenarioSpec(
            topic_count=data["topic_count"],
            relevant_topic=data["relevant_topic"],
            users=users,
            script=script,
            seed=data.get("seed", 0),
            concentration=concentration,  # type: ignore[arg-type]
            pins=pins,
        )
    except (KeyError, TypeError) as exc:
        raise InvalidSpec(f"malformed scenario document: {exc}") from None
    try:
        _validate(spec)
    except (TypeError, ValueError) as exc:
        raise InvalidSpec(f"malformed scenario document: {exc}") from None
    return spec


def _script(*entries: tuple[str, str] | tuple[str, str, int]) -> tuple[ScriptEntry, ...]:
    return tuple(ScriptEntry(e[0], e[1], e[2] if len(e) == 3 else None) for e in entries)


def example1() -> ScenarioSpec:
    """Four users, 16 messages, one troll.

    The troll U4 drops a controversy post, a senseless one and another
    controversy post into an otherwise on-topic discussion; U1 and U2 each
    answer the first troll post with one controversy message of their own;
    U3 only ever posts on topic.  The six pinned dominant masses are the
    published ones for U3's and U4's messages.
    """
    users = (("U1", "victim"), ("U2", "victim"), ("U3", "expert"), ("U4", "troll"))
    script = _script(
        ("U3", "relevant"),
        ("U1", "relevant"),
        ("U2", "relevant"),
        ("U3", "relevant"),
        ("U4", "controversy", 2),
        ("U1", "controversy", 2),
        ("U2", "controversy", 2),
        ("U3", "relevant"),
        ("U1", "relevant"),
        ("U2", "relevant"),
        ("U4", "senseless"),
        ("U1", "relevant"),
        ("U2", "relevant"),
        ("U4", "controversy", 2),
        ("U1", "relevant"),
        ("U2", "relevant"),
    )
    pins = {1: 0.9732, 4: 0.7782, 5: 0.9210, 8: 0.9632, 11: 0.9716, 14: 0.8387}
    return ScenarioSpec(
        topic_count=2,
        relevant_topic=1,
        users=users,
        script=script,
        seed=1,
        pins=pins,
    )


def example2() -> ScenarioSpec:
    """Eight users, 31 messages, two trolls.

    U8 trolls early (two off-topic posts, then a late controversy one) and
    U3 answers it with an off-topic message; U4 posts two controversy
    messages only after a long run of on-topic traffic, and U1 and U2 each
    answer with two controversy messages.  The published per-user counts
    total 30, so U2 carries one extra relevant message to reach 31.
    """
    users = (
        ("U1", "victim"),
        ("U2", "victim"),
        ("U3", "victim"),
        ("U4", "troll"),
        ("U5", "learner"),
        ("U6", "expert"),
        ("U7", "learner"),
        ("U8", "troll"),
    )
    script = _script(
        ("U2", "relevant"),
        ("U6", "relevant"),
        ("U8", "off_topic"),
        ("U3", "off_topic"),
        ("U2", "relevant"),
        ("U7", "relevant"),
        ("U8", "off_topic"),
        ("U3", "relevant"),
        ("U5", "relevant"),
        ("U2", "relevant"),
        ("U6", "relevant"),
        ("U3", "relevant"),
        ("U2", "relevant"),
        ("U7", "relevant"),
        ("U1", "relevant"),
        ("U2", "relevant"),
        ("U1", "relevant"),
        ("U6", "relevant"),
        ("U4", "controversy", 2),
        ("U1", "controversy", 2),
        ("U2", "controversy", 2),
        ("U3", "relevant"),
        ("U4", "controversy", 2),
        ("U1", "controversy", 2),
        ("U2", "controversy", 2),
        ("U2", "relevant"),
        ("U8", "controversy", 2),
        ("U1", "relevant"),
        ("U2", "relevant"),
        ("U3", "relevant"),
        ("U2", "relevant"),
    )
    return ScenarioSpec(
        topic_count=2,
        relevant_topic=1,
        users=users,
        script=script,
        seed=2,
    )


BUILTIN_SCENARIOS = {"example1": example1, "example2": example2}
