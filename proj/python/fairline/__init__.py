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

"""Fair cost sharing for shared rides on a line.

Agents are indexed 0..n-1 in order of destination and taxis in order of
nonincreasing capacity, as in the C++ library. Payments are exact
``fractions.Fraction`` values, or ``None`` for the infinite cost of an
over-full taxi.
"""

import json
from fractions import Fraction

from . import _core
from ._core import (FairlineError, backward_greedy, envies, evaluate,
                    from_ids, is_feasible, oracle, satisfies,
                    solve_ef_cap4, solve_ef_config, solve_ef_consecutive,
                    solve_ef_types, worked_allocation, worked_ids)

__all__ = [
    "FairlineError", "Instance", "backward_greedy", "costs", "envies",
    "evaluate", "from_ids", "generate", "is_feasible", "load", "oracle",
    "phi", "satisfies", "solve_ef_cap4", "solve_ef_config",
    "solve_ef_consecutive", "solve_ef_types", "total_cost",
    "worked_allocation", "worked_ids",
]


def _cost(text):
    return None if text == "inf" else Fraction(text)


class Instance(_core.Instance):
    """Accepts destinations as ints, strings or Fractions."""

    def __init__(self, destinations, capacities):
        super().__init__([str(x) for x in destinations], list(capacities))


def load(text_or_dict):
    """Instance from the JSON instance format (a string or a parsed dict)."""
    if not isinstance(text_or_dict, str):
        text_or_dict = json.dumps(text_or_dict)
    return _core.Instance.from_json(text_or_dict)


def phi(destinations, x):
    return Fraction(_core.phi([str(d) for d in destinations], str(x)))


def costs(instance, allocation):
    return [_cost(c) for c in _core.costs(instance, allocation)]


def total_cost(instance, allocation):
    return _cost(_core.total_cost(instance, allocation))


def generate(family, seed, **options):
    """Instance file as a dict; options are n, k, max_q and types."""
    return json.loads(_core.generate_json(family, seed, **options))
