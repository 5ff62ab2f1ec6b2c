"""The builtin fixtures, loaded from ``settings/fixtures.json``."""

from __future__ import annotations

import json
import pathlib
import re
from dataclasses import dataclass, field

from bocs_engine import config
from bocs_engine.dbq import DifferentialBiquiver
from bocs_engine.errors import BocsError
from bocs_engine.logger import logger
from bocs_engine.pathalg import AlgebraPresentation
from bocs_engine.pipelines import schur_an, two_simple
from bocs_engine.reduce import ReductionMove
from bocs_engine.shell.parsers import parse_algebra, parse_bocs, parse_script

EXAMPLE_PREFIX = "example:"

FAMILY = re.compile(r"^(schur_an|twosimple)\((\d+)(?:\s*,\s*(\d+))?\)$")

FIXTURE_KEYS = {"bocs", "algebra", "script", "check_counts", "expected"}

EXPECTED_KEYS = {"terminal_vertices", "terminal_arrows", "ar_edges", "right_algebra_dim"}


def _check_entry(name: str, entry) -> None:
    if not isinstance(entry, dict):
        raise BocsError(f"Fixture '{name}' must be an object, got {type(entry).__name__}")
    unknown = set(entry) - FIXTURE_KEYS
    if unknown:
        raise BocsError(f"Fixture '{name}' has unknown keys {sorted(unknown)}")
    if not isinstance(entry.get("bocs"), str):
        raise BocsError(f"Fixture '{name}' needs a 'bocs' file name")
    for key in ("algebra", "script"):
        if entry.get(key) is not None and not isinstance(entry[key], str):
            raise BocsError(f"Fixture '{name}': '{key}' must be a file name or null")
    if not isinstance(entry.get("check_counts", False), bool):
        raise BocsError(f"Fixture '{name}': 'check_counts' must be true or false")
    expected = entry.get("expected", {})
    if not isinstance(expected, dict) or set(expected) - EXPECTED_KEYS:
        raise BocsError(
            f"Fixture '{name}': 'expected' may only hold {', '.join(sorted(EXPECTED_KEYS))}"
        )
    for key, value in expected.items():
        if isinstance(value, bool) or not isinstance(value, int) or value < 0:
            raise BocsError(f"Fixture '{name}': expected {key} must be a non-negative integer")


def read_settings(settings_file_path: pathlib.Path | str) -> dict[str, dict]:
    """Read and check a fixtures file.

    The file maps each fixture name to an entry with a ``bocs`` file name and,
    optionally, ``algebra`` and ``script`` file names, a ``check_counts`` flag and the
    ``expected`` invariants of a full reduction.

    Args:
        settings_file_path: The path to the JSON file.

    Returns:
        dict: The entries, by fixture name.

    Raises:
        BocsError: if the file is not an object of well formed entries.
    """

    with open(settings_file_path, "r", encoding="utf-8") as f:
        entries = json.load(f)

    if not isinstance(entries, dict):
        raise BocsError(f"{settings_file_path} must map fixture names to entries")
    for name, entry in entries.items():
        _check_entry(name, entry)

    return entries


@dataclass
class Fixture:
    """A named bocs, with the algebra it comes from when that is known.

    Attributes:
        name: The registry name.
        dbq: The bocs.
        algebra: The algebra presentation, or None.
        script: The move script replaying the reduction, or None.
        check_counts: Whether the bocs should match Ext of the standard modules.
        expected: Invariants of a full reduction: terminal_vertices,
            terminal_arrows, ar_edges and right_algebra_dim, when known.
    """

    name: str
    dbq: DifferentialBiquiver
    algebra: AlgebraPresentation | None = None
    script: list[ReductionMove] | None = None
    check_counts: bool = False
    expected: dict[str, int] = field(default_factory=dict)


def _read_text(path: pathlib.Path) -> str:
    with open(path, "r", encoding="utf-8") as f:
        return f.read()


def _family(name: str) -> Fixture | None:
    match = FAMILY.match(name.replace(" ", ""))
    if match is None:
        return None
    family, first, second = match.groups()
    if family == "schur_an":
        if second is not None:
            raise ValueError(f"schur_an takes one parameter, got '{name}'")
        member = schur_an(int(first))
        return Fixture(
            name,
            member.dbq,
            member.presentation,
            expected={"right_algebra_dim": member.expected_right_dim},
        )
    if second is None:
        raise ValueError(f"twosimple takes two parameters, got '{name}'")
    member = two_simple(int(first), int(second))
    return Fixture(name, member.dbq, expected={"right_algebra_dim": member.expected_dim})


class FixtureRegistry:
    """Lookup of the builtin fixtures and of the ``schur_an(n)`` and
    ``twosimple(s,t)`` families.

    Files are read when a fixture is first requested.
    """

    def __init__(self, settings: pathlib.Path | str | None = None):
        self.settings = pathlib.Path(settings) if settings else config.BocsPATHS.settings
        self.entries = read_settings(self.settings / "fixtures.json")
        self._cache: dict[str, Fixture] = {}

    @property
    def names(self) -> list[str]:
        return list(self.entries)

    def __contains__(self, name: str) -> bool:
        return name in self.entries or FAMILY.match(name.replace(" ", "")) is not None

    def script_path(self, name: str) -> pathlib.Path:
        return self.settings / "scripts" / name

    def get(self, name: str) -> Fixture:
        """The fixture called ``name``, with or without the ``example:`` prefix.

        Raises:
            KeyError: if there is no such fixture.
        """
        name = name.removeprefix(EXAMPLE_PREFIX)
        if name in self._cache:
            return self._cache[name]

        fixture = _family(name)
        if fixture is None:
            if name not in self.entries:
                raise KeyError(f"No fixture named '{name}'. Available: {', '.join(self.names)}")
            entry = self.entries[name]
            folder = self.settings / "fixtures"
            fixture = Fixture(
                name,
                parse_bocs(_read_text(folder / entry["bocs"])),
                parse_algebra(_read_text(folder / entry["algebra"])) if entry.get("algebra") else None,
                parse_script(_read_text(self.script_path(entry["script"]))) if entry.get("script") else None,
                entry.get("check_counts", False),
                dict(entry.get("expected", {})),
            )
            logger.debug(f"Loaded fixture {name} from {folder}")
        self._cache[name] = fixture
        return fixture

    def __getitem__(self, name: str) -> Fixture:
        return self.get(name)


def load_bocs(reference: str, registry: FixtureRegistry | None = None) -> DifferentialBiquiver:
    """A bocs from a file path or an ``example:NAME`` reference."""
    if reference.startswith(EXAMPLE_PREFIX):
        return (registry or FixtureRegistry()).get(reference).dbq
    return parse_bocs(_read_text(pathlib.Path(reference)))


def load_algebra(reference: str, registry: FixtureRegistry | None = None) -> AlgebraPresentation:
    """An algebra from a file path or an ``example:NAME`` reference."""
    if reference.startswith(EXAMPLE_PREFIX):
        fixture = (registry or FixtureRegistry()).get(reference)
        if fixture.algebra is None:
            raise KeyError(f"Fixture '{fixture.name}' has no algebra presentation")
        return fixture.algebra
    return parse_algebra(_read_text(pathlib.Path(reference)))


def load_script(reference: str, registry: FixtureRegistry | None = None) -> list[ReductionMove]:
    """A move script from a file path, falling back to the builtin scripts folder."""
    path = pathlib.Path(reference)
    if not path.exists():
        builtin = (registry or FixtureRegistry()).script_path(reference)
        if builtin.exists():
            path = builtin
    return parse_script(_read_text(path))
