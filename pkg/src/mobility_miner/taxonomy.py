"""Rewrite venue categories into abstract place labels.

Rule files are UTF-8 text, one rule per line:

    exact|prefix|substring "<pattern>" -> "<label>"

Blank lines and ``#`` comments are ignored. An optional final directive
``default passthrough`` or ``default "<label>"`` sets the policy for
categories no rule matches (passthrough if absent). Rules apply
top-to-bottom, first match wins; matching is case-insensitive.
"""

from __future__ import annotations

import os
import re
from dataclasses import dataclass
from datetime import datetime

from .ingest import UserHistory

_RULE_RE = re.compile(r'^(exact|prefix|substring)\s+"([^"]*)"\s*->\s*"([^"]*)"$')
_DEFAULT_LABEL_RE = re.compile(r'^default\s+"([^"]*)"$')
_DEFAULT_PASSTHROUGH_RE = re.compile(r"^default\s+passthrough$")


class TaxonomyError(ValueError):
    """Base class for taxonomy file problems; carries the 1-based line number."""

    def __init__(self, line_number: int, message: str):
        super().__init__(f"line {line_number}: {message}")
        self.line_number = line_number


class RuleSyntaxError(TaxonomyError):
    pass


class EmptyLabelError(TaxonomyError):
    pass


@dataclass(frozen=True, slots=True)
class Rule:
    kind: str  # "exact" | "prefix" | "substring"
    pattern: str
    label: str

    def matches(self, category_name: str) -> bool:
        name = category_name.casefold()
        pattern = self.pattern.casefold()
        if self.kind == "exact":
            return name == pattern
        if self.kind == "prefix":
            return name.startswith(pattern)
        return pattern in name


@dataclass(frozen=True, slots=True)
class LabelTaxonomy:
    rules: tuple[Rule, ...]
    default_label: str | None = None  # None means passthrough

    def label_for(self, category_name: str) -> str:
        for rule in self.rules:
            if rule.matches(category_name):
                return rule.label
        if self.default_label is not None:
            return self.default_label
        return category_name


@dataclass(frozen=True, slots=True)
class LabeledVisit:
    user_id: str
    label: str
    utc_time: datetime
    tz_offset_minutes: int
    venue_id: str  # provenance only


def identity_taxonomy() -> LabelTaxonomy:
    """No rules, passthrough default: every category labels as itself."""
    return LabelTaxonomy(rules=())


def parse_taxonomy(text: str) -> LabelTaxonomy:
    rules: list[Rule] = []
    default_label: str | None = None
    default_seen = False
    for i, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if default_seen:
            raise RuleSyntaxError(i, "default must be the final directive")
        if _DEFAULT_PASSTHROUGH_RE.match(line):
            default_seen = True
            continue
        default_match = _DEFAULT_LABEL_RE.match(line)
        if default_match:
            if not default_match.group(1):
                raise EmptyLabelError(i, "default label must be non-empty")
            default_label = default_match.group(1)
            default_seen = True
            continue
        rule_match = _RULE_RE.match(line)
        if rule_match is None:
            raise RuleSyntaxError(i, f"unrecognized rule line: {line!r}")
        kind, pattern, label = rule_match.groups()
        if not label:
            raise EmptyLabelError(i, "rule label must be non-empty")
        rules.append(Rule(kind, pattern, label))
    return LabelTaxonomy(tuple(rules), default_label)


def load_taxonomy(path: str | os.PathLike) -> LabelTaxonomy:
    with open(path, encoding="utf-8") as handle:
        return parse_taxonomy(handle.read())


def relabel(history: UserHistory, tax: LabelTaxonomy) -> list[LabeledVisit]:
    """Map every record's category to its place label, preserving order."""
    return [
        LabeledVisit(
            user_id=record.user_id,
            label=tax.label_for(record.venue_category_name),
            utc_time=record.utc_time,
            tz_offset_minutes=record.tz_offset_minutes,
            venue_id=record.venue_id,
        )
        for record in history.records
    ]
