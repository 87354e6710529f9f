# Copyright 2026 The Fairline Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Smoke tests for the Python bindings."""

from fractions import Fraction

import pytest

import fairline


def worked(ident):
    return fairline.load(fairline.generate(f"paper-example:{ident}", 0))


def test_payments_are_exact():
    inst = fairline.Instance([40, 12, "36", Fraction(24)], [4])
    assert inst.destinations == ["12", "24", "36", "40"]
    alloc = [[0, 1, 2, 3]]
    assert fairline.costs(inst, alloc) == [3, 7, 13, 17]
    assert fairline.total_cost(inst, alloc) == 40
    assert fairline.phi([12, 24, 36, 40], 24) == 7
    assert fairline.phi(["1/2", 1], "1/2") == Fraction(1, 4)


def test_overfull_taxi_costs_infinity():
    inst = fairline.Instance([1, 2, 3], [2, 1])
    assert fairline.costs(inst, [[0, 1, 2], []]) == [None, None, None]
    assert not fairline.is_feasible(inst, [[0, 1, 2], []])


def test_checks_on_worked_instances():
    ex7 = worked(7)
    report = fairline.evaluate(
        ex7, fairline.from_ids(ex7, fairline.worked_allocation("7")))
    assert report["feasible"] and not report["ef"]

    ex2 = worked(2)
    greedy = fairline.backward_greedy(ex2)
    assert fairline.total_cost(ex2, greedy) == 8
    for concept in ("ns", "sss", "so"):
        assert fairline.satisfies(ex2, greedy, concept)


def test_solvers_agree_with_oracle():
    ex8 = worked(8)
    answer = fairline.oracle(ex8, "ef", max_agents=10, dedup=True)
    assert answer["exists"] and answer["count"] == 1
    assert fairline.solve_ef_consecutive(ex8) is None
    for solve in (fairline.solve_ef_config, fairline.solve_ef_types):
        alloc = solve(ex8)
        assert alloc is not None
        assert fairline.satisfies(ex8, alloc, "ef")

    ex7 = worked(7)
    assert not fairline.oracle(ex7, "ef")["exists"]
    assert fairline.solve_ef_cap4(ex7) is None


def test_errors_carry_codes():
    with pytest.raises(fairline.FairlineError) as info:
        fairline.generate("nope", 1)
    assert info.value.args[0] == "UnknownFamily"
    with pytest.raises(fairline.FairlineError) as info:
        fairline.solve_ef_cap4(fairline.Instance([1, 2], [5]))
    assert info.value.args[0] == "CapacityTooLarge"
    with pytest.raises(fairline.FairlineError):
        fairline.oracle(worked(8), "ef")
    with pytest.raises(fairline.FairlineError):
        fairline.load("{")


def test_generate_is_deterministic():
    a = fairline.generate("uniform-types", 5, n=7, k=3, max_q=3, types=3)
    assert a == fairline.generate("uniform-types", 5, n=7, k=3, max_q=3,
                                  types=3)
    assert len(a["destinations"]) == 7
    assert "fig7" in fairline.worked_ids()
