# Copyright 2026 The semilin Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Python front end to the semilin command layer.

Every function takes the same JSON documents as the command line tool,
either as dicts or as JSON text, and returns a :class:`Result` holding the
report dict and the exit code the tool would have used (0 ok, 1 violated,
2 inconclusive, 3 structural error).
"""

import json
from typing import Any, NamedTuple, Optional, Sequence, Union

from . import _semilin

__all__ = [
    "DEFAULT_BUDGET",
    "Result",
    "validate",
    "orbit",
    "extend",
    "norm",
    "hausdorff",
    "linearize",
    "certify",
]

DEFAULT_BUDGET = _semilin.DEFAULT_BUDGET

Document = Union[dict, str]


class Result(NamedTuple):
    output: dict
    exit_code: int

    @property
    def ok(self) -> bool:
        return self.exit_code == 0


def _text(doc: Optional[Document]) -> Optional[str]:
    if doc is None or isinstance(doc, str):
        return doc
    return json.dumps(doc)


def _result(raw) -> Result:
    text, code = raw
    return Result(json.loads(text), code)


def _opts(mode: str, tolerance: float, budget: int, seed: int) -> dict:
    return {"mode": mode, "tolerance": tolerance, "budget": budget, "seed": seed}


def validate(space: Document, action: Optional[Document] = None, *, mode="exact", tolerance=1e-9,
             budget=DEFAULT_BUDGET, seed=0) -> Result:
    return _result(_semilin.validate(_text(space), _text(action), **_opts(mode, tolerance, budget, seed)))


def orbit(space: Document, action: Document, point: str, *, mode="exact", tolerance=1e-9,
          budget=DEFAULT_BUDGET, seed=0) -> Result:
    return _result(_semilin.orbit(_text(space), _text(action), point, **_opts(mode, tolerance, budget, seed)))


def extend(space: Document, action: Document, constant: Optional[Any] = None, *, mode="exact",
           tolerance=1e-9, budget=DEFAULT_BUDGET, seed=0) -> Result:
    c = None if constant is None else str(constant)
    return _result(_semilin.extend(_text(space), _text(action), c, **_opts(mode, tolerance, budget, seed)))


def norm(space: Document, combination: Document, base: Optional[str] = None, *, mode="exact",
         tolerance=1e-9, budget=DEFAULT_BUDGET, seed=0) -> Result:
    return _result(_semilin.norm(_text(space), _text(combination), base, **_opts(mode, tolerance, budget, seed)))


def hausdorff(space: Document, action: Document, sets: Sequence[str] = (), *, mode="exact",
              tolerance=1e-9, budget=DEFAULT_BUDGET, seed=0) -> Result:
    return _result(_semilin.hausdorff(_text(space), _text(action), list(sets),
                                      **_opts(mode, tolerance, budget, seed)))


def linearize(space: Document, action: Document, *, mode="exact", tolerance=1e-9,
              budget=DEFAULT_BUDGET, seed=0) -> Result:
    return _result(_semilin.linearize(_text(space), _text(action), **_opts(mode, tolerance, budget, seed)))


def certify(bundle: Document, *, mode="exact", tolerance=1e-9, budget=DEFAULT_BUDGET, seed=0) -> Result:
    return _result(_semilin.certify(_text(bundle), **_opts(mode, tolerance, budget, seed)))
