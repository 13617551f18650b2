"""Helper functions for flag_algebras' unit tests."""
import json
from typing import Any, Mapping

from flag_algebras.grading import TransitiveLabeling, check_transitive
from flag_algebras.groups import Element, FiniteGroup
from flag_algebras.poset import Pair, Preorder


def ignore_unused(
    *args: Any, reason: str = "Pyright emmits an info that LSP is not able to ignore."
) -> None:
    """Shuts up language-servers' warnings about an unused variable/function/fixture."""
    _ = args, reason


def labeling(
    preorder: Preorder, group: FiniteGroup, off_diagonal: Mapping[Pair, Element]
) -> TransitiveLabeling:
    """
    A validated labeling from its values off the diagonal; diagonal pairs get
    the identity, and so does any pair not given.
    """
    raw = {pair: 0 for pair in preorder.pairs}
    raw.update(off_diagonal)
    return check_transitive(preorder, group, raw)


def parse_text_report(text: str) -> dict[str, str]:
    """Top-level `key: value` lines of a text report."""
    entries = {}
    for line in text.splitlines():
        if line and not line.startswith(" ") and not line.startswith("-") and ": " in line:
            key, value = line.split(": ", 1)
            entries[key] = value
    return entries


def report_json(output: str) -> dict[str, Any]:
    """The JSON report in a CLI output, skipping notes printed before it."""
    return json.loads(output[output.index("{") : output.rindex("}") + 1])
