"""Budgets and defaults shared by the library and the CLI."""
from dataclasses import dataclass, replace
from pathlib import Path
from typing import Any

from .errors import MalformedInput


@dataclass(frozen=True)
class Budgets:
    """Upper bounds on the size of each kind of exhaustive search."""

    labelings: int
    orbits: int
    search: int
    enumeration: int
    antichain_classes: int


@dataclass(frozen=True)
class Settings:
    """Everything read from a defaults TOML file."""

    budgets: Budgets
    max_prime: int
    catalog: tuple[str, ...]
    seed: int
    samples: int
    identity_cases: int

    def with_budget(self, budget: int | None) -> "Settings":
        """Overrides every enumeration budget with a single value."""
        if budget is None:
            return self
        budgets = Budgets(
            labelings=budget,
            orbits=budget,
            search=budget,
            enumeration=budget,
            antichain_classes=self.budgets.antichain_classes,
        )
        return replace(self, budgets=budgets)


def _settings_from(contents: dict[str, Any]) -> Settings:
    budgets = contents["budgets"]
    return Settings(
        budgets=Budgets(
            labelings=int(budgets["labelings"]),
            orbits=int(budgets["orbits"]),
            search=int(budgets["search"]),
            enumeration=int(budgets["enumeration"]),
            antichain_classes=int(budgets["antichain_classes"]),
        ),
        max_prime=int(contents["field"]["max_prime"]),
        catalog=tuple(contents["catalog"]["groups"]),
        seed=int(contents["sampling"]["seed"]),
        samples=int(contents["sampling"]["samples"]),
        identity_cases=int(contents["sampling"]["identity_cases"]),
    )


def load_settings(path: Path) -> Settings:
    """Loads a TOML file containing budgets, field cap and group catalog."""
    import toml

    try:
        with open(path, encoding="utf-8") as f:
            toml_contents = toml.load(f)
    except OSError as error:
        raise MalformedInput(f"Cannot read {path}: {error.strerror}", str(path)) from error
    except toml.TomlDecodeError as error:
        raise MalformedInput(f"Invalid TOML in {path}: {error}", str(path)) from error

    try:
        return _settings_from(toml_contents)
    except (KeyError, TypeError, ValueError) as error:
        raise MalformedInput(
            f"Missing or invalid setting {error} in {path}", str(error)
        ) from error


SETTINGS = load_settings(Path(__file__).parent / "defaults.toml")
