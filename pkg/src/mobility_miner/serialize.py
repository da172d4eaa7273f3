"""Canonical JSON rendering shared by the library, the CLI, and the service."""

from __future__ import annotations

import json


def canonical_json(payload: object) -> str:
    """Render a payload in the one canonical form (2-space indent, raw unicode,
    trailing newline) so repeated runs are byte-identical."""
    return json.dumps(payload, ensure_ascii=False, indent=2) + "\n"
