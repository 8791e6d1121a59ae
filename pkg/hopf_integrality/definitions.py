"""
JSON definition files for Hopf algebras, commutative algebras and actions.

Every exact scalar is written as a string, e.g. ``"-1/2"`` or ``"z + 1"``.
Action files may reference their Hopf algebra and algebra files by paths
relative to the action file itself.
"""
from __future__ import annotations

import json
import logging
import os
from typing import Any, Optional, Union

from hopf_integrality.action import ActionSpec, ActionSpecError
from hopf_integrality.commalg import FPCommAlgebra
from hopf_integrality.exactfield import Field, field_from_spec
from hopf_integrality.findim import HopfAlgebraData, HopfDataError, build_from_tables

logger = logging.getLogger('hopf_integrality.definitions')

_SCALAR_TABLES = ('mult', 'unit', 'comult', 'counit', 'antipode', 'coradical_hint')


class DefinitionError(ValueError):
    """Exception raised for unreadable or schema-violating definition files."""


def _read_json(path: str) -> dict:
    try:
        with open(path, 'r', encoding='utf-8') as f:
            data = json.load(f)
    except json.JSONDecodeError as e:
        raise DefinitionError(f"{path}:{e.lineno}:{e.colno}: {e.msg}") from e
    except OSError as e:
        raise DefinitionError(f"{path}: {e.strerror}") from e
    if not isinstance(data, dict):
        raise DefinitionError(f"{path}: top level must be an object")
    return data


def _require(data: dict, key: str, path: str) -> Any:
    if key not in data:
        raise DefinitionError(f"{path}: missing key {key!r}")
    return data[key]


def _check_strings(value, pointer: str, path: str):
    """All leaves of a nested list must be strings."""
    if isinstance(value, list):
        for k, item in enumerate(value):
            _check_strings(item, f"{pointer}[{k}]", path)
    elif not isinstance(value, str):
        raise DefinitionError(f"{path}: {pointer}: scalars must be strings, got {json.dumps(value)}")


def _field(data: dict, path: str) -> Field:
    try:
        return field_from_spec(_require(data, 'field', path))
    except ValueError as e:
        raise DefinitionError(f"{path}: field: {e}") from e


def hopf_from_dict(data: dict, path: str = '<hopf>') -> HopfAlgebraData:
    F = _field(data, path)
    for key in _SCALAR_TABLES:
        if key in data:
            _check_strings(data[key], key, path)
    try:
        return build_from_tables(F, _require(data, 'basis', path), _require(data, 'mult', path),
                                 _require(data, 'unit', path), _require(data, 'comult', path),
                                 _require(data, 'counit', path), _require(data, 'antipode', path),
                                 data.get('coradical_hint'))
    except HopfDataError as e:
        raise DefinitionError(f"{path}: {e}") from e


def algebra_from_dict(data: dict, path: str = '<algebra>') -> FPCommAlgebra:
    F = _field(data, path)
    variables = _require(data, 'variables', path)
    relations = data.get('relations', [])
    if not isinstance(variables, list) or not all(isinstance(v, str) for v in variables):
        raise DefinitionError(f"{path}: variables: expected a list of names")
    if not isinstance(relations, list):
        raise DefinitionError(f"{path}: relations: expected a list of polynomial strings")
    _check_strings(relations, 'relations', path)
    try:
        return FPCommAlgebra.create(F, variables, relations, data.get('order', 'grevlex'))
    except ValueError as e:
        raise DefinitionError(f"{path}: {e}") from e


def _basis_index(H: HopfAlgebraData, ref, pointer: str, path: str) -> int:
    if isinstance(ref, int) and not isinstance(ref, bool):
        if not 0 <= ref < H.dim:
            raise DefinitionError(f"{path}: {pointer}: basis index {ref} out of range")
        return ref
    if isinstance(ref, str) and ref in H.basis_names:
        return H.basis_names.index(ref)
    raise DefinitionError(f"{path}: {pointer}: unknown basis element {json.dumps(ref)}")


def action_from_dict(data: dict, hopf: HopfAlgebraData, algebra: FPCommAlgebra,
                     path: str = '<action>') -> ActionSpec:
    entries = _require(data, 'action', path)
    if not isinstance(entries, list):
        raise DefinitionError(f"{path}: action: expected a list of entries")
    images = {}
    for k, entry in enumerate(entries):
        pointer = f"action[{k}]"
        if not isinstance(entry, dict):
            raise DefinitionError(f"{path}: {pointer}: expected an object")
        i = _basis_index(hopf, _require(entry, 'basis', f"{path}: {pointer}"), f"{pointer}.basis", path)
        var = _require(entry, 'var', f"{path}: {pointer}")
        if var not in algebra.variables:
            raise DefinitionError(f"{path}: {pointer}.var: unknown variable {json.dumps(var)}")
        value = _require(entry, 'value', f"{path}: {pointer}")
        _check_strings(value, f"{pointer}.value", path)
        key = (i, algebra.variables.index(var))
        if key in images:
            raise DefinitionError(f"{path}: {pointer}: duplicate entry for {hopf.basis_names[i]} . {var}")
        images[key] = value
    try:
        return ActionSpec.create(hopf, algebra, images)
    except ActionSpecError as e:
        raise DefinitionError(f"{path}: {e}") from e


def load_hopf(path: str) -> HopfAlgebraData:
    return hopf_from_dict(_read_json(path), path)


def load_algebra(path: str) -> FPCommAlgebra:
    return algebra_from_dict(_read_json(path), path)


def _resolve(ref, base: str, key: str, path: str) -> str:
    if not isinstance(ref, str):
        raise DefinitionError(f"{path}: {key}: expected a file path")
    return ref if os.path.isabs(ref) else os.path.join(os.path.dirname(os.path.abspath(base)), ref)


def load_action(path: str, hopf: Optional[HopfAlgebraData] = None,
                algebra: Optional[FPCommAlgebra] = None) -> ActionSpec:
    """Load an action; missing ``hopf``/``algebra`` arguments are read from the file's references."""
    data = _read_json(path)
    if hopf is None:
        hopf = load_hopf(_resolve(_require(data, 'hopf', path), path, 'hopf', path))
    if algebra is None:
        algebra = load_algebra(_resolve(_require(data, 'algebra', path), path, 'algebra', path))
    return action_from_dict(data, hopf, algebra, path)


def parse_definition(path: str) -> Union[HopfAlgebraData, FPCommAlgebra, ActionSpec]:
    """Load any definition file, telling the kinds apart by their keys."""
    data = _read_json(path)
    if 'action' in data:
        return load_action(path)
    if 'mult' in data:
        return hopf_from_dict(data, path)
    if 'variables' in data:
        return algebra_from_dict(data, path)
    raise DefinitionError(f"{path}: not a Hopf algebra, algebra or action definition")


def _vector(F: Field, v) -> list[str]:
    return [F.format(a) for a in v]


def dump_hopf(H: HopfAlgebraData) -> dict:
    F = H.field
    data = {
        'field': F.to_spec(),
        'basis': list(H.basis_names),
        'mult': [[_vector(F, v) for v in row] for row in H.mult],
        'unit': _vector(F, H.unit),
        'comult': [_vector(F, v) for v in H.comult],
        'counit': _vector(F, H.counit),
        'antipode': [_vector(F, v) for v in H.antipode],
    }
    if H.coradical_hint is not None:
        data['coradical_hint'] = [_vector(F, v) for v in H.coradical_hint]
    return data


def dump_algebra(A: FPCommAlgebra) -> dict:
    return {
        'field': A.field.to_spec(),
        'variables': list(A.variables),
        'relations': [A.format(r) for r in A.relations],
        'order': A.order,
    }


def dump_action(spec: ActionSpec, hopf_ref: Optional[str] = None, algebra_ref: Optional[str] = None) -> dict:
    H, A = spec.hopf, spec.algebra
    data = {}
    if hopf_ref:
        data['hopf'] = hopf_ref
    if algebra_ref:
        data['algebra'] = algebra_ref
    data['action'] = [
        {'basis': H.basis_names[i], 'var': A.variables[v], 'value': A.format(spec.image(i, v))}
        for i in range(H.dim) for v in range(A.nvars)
    ]
    return data


def to_json(data: dict) -> str:
    return json.dumps(data, indent=2, sort_keys=True, ensure_ascii=False) + '\n'


def write_definition(data: dict, path: str):
    with open(path, 'w', encoding='utf-8') as f:
        f.write(to_json(data))
    logger.debug("wrote %s", path)
