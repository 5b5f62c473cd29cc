"""Collects acceptance-criterion outcomes and prints one line per criterion."""

from collections import defaultdict

import pytest

_outcomes: dict[int, list[tuple[bool, str]]] = defaultdict(list)
_titles: dict[int, str] = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    number, title = mark.args
    _titles[number] = title
    if rep.when == "call" or (rep.when == "setup" and not rep.passed):
        known = getattr(rep, "wasxfail", "")
        _outcomes[number].append((rep.passed and not known, known))


def pytest_terminal_summary(terminalreporter):
    if not _titles:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_titles):
        results = _outcomes.get(number, [])
        ok = bool(results) and all(r for r, _ in results)
        line = f"criterion {number:2d}: {'PASS' if ok else 'FAIL'}  {_titles[number]}"
        notes = {k for _, k in results if k}
        if notes:
            line += f"  [known failure: {'; '.join(sorted(notes))}]"
        terminalreporter.write_line(line)
