import pathlib

import pytest

from voracious import CoxeterSystem, VoraciousLanguage, WallGeometry, load_group_file

GROUPS_DIR = pathlib.Path(__file__).resolve().parent.parent / "groups"


class Stack:
    """Shared per-group computation stack; caches carry across tests."""

    def __init__(self, name: str):
        self.name = name
        self.cox = load_group_file(str(GROUPS_DIR / f"{name}.json"))
        self.system = CoxeterSystem(self.cox)
        self.geometry = WallGeometry(self.system)
        self.language = VoraciousLanguage(self.geometry)

    def element(self, text: str):
        from voracious import word_from_string

        word = word_from_string(text, self.cox.generators)
        return self.system.intern(self.system.element_of_word(word))

    def word(self, text: str):
        from voracious import word_from_string

        return word_from_string(text, self.cox.generators)


_CACHE: dict[str, Stack] = {}


@pytest.fixture(scope="session")
def stack():
    def get(name: str) -> Stack:
        if name not in _CACHE:
            _CACHE[name] = Stack(name)
        return _CACHE[name]

    return get
