"""
Hopf YD Verifier - Schema Validator
Validation des documents d'entrée (algèbres, automorphismes, modules) avec JSONSchema
"""
import jsonschema
from typing import Dict, List, Any, Optional
import logging
from datetime import datetime

logger = logging.getLogger(__name__)

_SCALAR = {"type": ["string", "integer"]}
_INDEX = {"type": "integer", "minimum": 0}


def _sparse(arity: int) -> Dict:
    """Liste d'entrées [i, j, ..., "c"]"""
    return {
        "type": "array",
        "items": {
            "type": "array",
            "minItems": arity + 1,
            "maxItems": arity + 1,
            "prefixItems": [_INDEX] * arity + [_SCALAR],
            "items": False,
        },
    }


_FIELD = {
    "type": "object",
    "required": ["type"],
    "properties": {
        "type": {"enum": ["Q", "Fp"]},
        "p": {"type": "integer", "minimum": 2},
    },
    "additionalProperties": False,
}


class InputSchemaValidator:
    """Validateur de schémas pour les fichiers d'entrée"""

    def __init__(self):
        self.loaded_schemas: Dict[str, Dict] = {}
        self.input_schemas = {
            'builtin': self._get_builtin_schema(),
            'hopf_algebra': self._get_hopf_algebra_schema(),
            'automorphisms': self._get_automorphisms_schema(),
            'yd_module': self._get_module_schema(),
        }

    def validate_data(self, data: Any, schema_name: str) -> Dict[str, Any]:
        """Valide un document contre un schéma ; toutes les erreurs sont collectées"""

        validation_result = {
            'is_valid': False,
            'errors': [],
            'warnings': [],
            'schema_used': schema_name,
            'timestamp': datetime.now().isoformat(),
        }

        schema = self._load_schema(schema_name)
        if not schema:
            validation_result['errors'].append(f"Schema '{schema_name}' not found")
            return validation_result

        validator = jsonschema.Draft202012Validator(schema)
        for error in sorted(validator.iter_errors(data), key=lambda e: list(e.path)):
            validation_result['errors'].append({
                'error_message': error.message,
                'error_path': list(error.path),
            })

        if isinstance(data, dict):
            validation_result['warnings'].extend(self._structural_warnings(data))

        validation_result['is_valid'] = len(validation_result['errors']) == 0
        logger.debug(f"Schema '{schema_name}' validation: {len(validation_result['errors'])} error(s)")
        return validation_result

    def detect_schema(self, data: Any) -> Optional[str]:
        """Schéma à appliquer selon le champ 'kind' ou 'builtin' du document"""
        if not isinstance(data, dict):
            return None
        if 'builtin' in data:
            return 'builtin'
        kind = data.get('kind', 'hopf_algebra')
        return kind if kind in self.input_schemas else None

    def _load_schema(self, schema_name: str) -> Optional[Dict]:
        if schema_name in self.loaded_schemas:
            return self.loaded_schemas[schema_name]
        schema = self.input_schemas.get(schema_name)
        if schema is not None:
            self.loaded_schemas[schema_name] = schema
        return schema

    def _structural_warnings(self, data: Dict) -> List[str]:
        warnings = []
        basis = data.get('basis')
        if isinstance(basis, list) and 'dim' in data and data['dim'] != len(basis):
            warnings.append(f"dim={data['dim']} but basis has {len(basis)} labels")
        for key in ('mul', 'comul', 'action', 'coaction', 'antipode'):
            entries = data.get(key)
            if isinstance(entries, list):
                seen = set()
                for entry in entries:
                    if isinstance(entry, list) and len(entry) > 1:
                        index = tuple(entry[:-1])
                        if index in seen:
                            warnings.append(f"'{key}' lists index {list(index)} more than once; values are summed")
                            break
                        seen.add(index)
        if 'antipode_inv' not in data and data.get('kind', 'hopf_algebra') == 'hopf_algebra' \
                and 'builtin' not in data:
            warnings.append("no 'antipode_inv' given; it is computed by exact inversion")
        return warnings

    def _get_builtin_schema(self) -> Dict:
        return {
            "$schema": "https://json-schema.org/draft/2020-12/schema",
            "type": "object",
            "title": "Builtin Hopf Algebra Request",
            "required": ["builtin"],
            "properties": {
                "builtin": {"enum": ["sweedler4", "cyclic", "symmetric", "group_algebra", "dual_of"]},
                "field": _FIELD,
                "n": {"type": "integer", "minimum": 1},
                "labels": {"type": "array", "items": {"type": "string"}},
                "table": {"type": "array", "items": {"type": "array", "items": _INDEX}},
                "name": {"type": "string"},
                "of": {"type": "object"},
            },
            "additionalProperties": False,
        }

    def _get_hopf_algebra_schema(self) -> Dict:
        return {
            "$schema": "https://json-schema.org/draft/2020-12/schema",
            "type": "object",
            "title": "Hopf Algebra Structure Constants",
            "required": ["field", "dim", "basis", "mul", "unit", "comul", "counit", "antipode"],
            "properties": {
                "kind": {"const": "hopf_algebra"},
                "name": {"type": "string", "minLength": 1},
                "field": _FIELD,
                "dim": {"type": "integer", "minimum": 1},
                "basis": {"type": "array", "items": {"type": "string"}, "minItems": 1, "uniqueItems": True},
                "mul": _sparse(3),
                "unit": {"type": "array", "items": _SCALAR},
                "comul": _sparse(3),
                "counit": {"type": "array", "items": _SCALAR},
                "antipode": _sparse(2),
                "antipode_inv": _sparse(2),
            },
            "additionalProperties": False,
        }

    def _get_automorphisms_schema(self) -> Dict:
        return {
            "$schema": "https://json-schema.org/draft/2020-12/schema",
            "type": "object",
            "title": "Hopf Automorphisms",
            "required": ["kind", "automorphisms"],
            "properties": {
                "kind": {"const": "automorphisms"},
                "algebra": {"type": ["object", "string"]},
                "automorphisms": {
                    "type": "array",
                    "items": {
                        "type": "object",
                        "required": ["name", "matrix"],
                        "properties": {
                            "name": {"type": "string", "minLength": 1},
                            "matrix": _sparse(2),
                        },
                        "additionalProperties": False,
                    },
                },
            },
            "additionalProperties": False,
        }

    def _get_module_schema(self) -> Dict:
        automorphism_ref = {
            "oneOf": [
                {"type": "string"},
                {
                    "type": "object",
                    "required": ["name", "matrix"],
                    "properties": {"name": {"type": "string"}, "matrix": _sparse(2)},
                    "additionalProperties": False,
                },
            ]
        }
        return {
            "$schema": "https://json-schema.org/draft/2020-12/schema",
            "type": "object",
            "title": "(alpha,beta)-Yetter-Drinfeld Module",
            "required": ["kind", "algebra", "component", "basis", "action", "coaction"],
            "properties": {
                "kind": {"const": "yd_module"},
                "name": {"type": "string", "minLength": 1},
                "algebra": {"type": ["object", "string"]},
                "component": {"type": "array", "minItems": 2, "maxItems": 2, "items": automorphism_ref},
                "basis": {"type": "array", "items": {"type": "string"}, "minItems": 1, "uniqueItems": True},
                "action": _sparse(3),
                "coaction": _sparse(3),
            },
            "additionalProperties": False,
        }

    def get_validation_report(self, validation_result: Dict[str, Any]) -> str:
        """Rapport texte d'une validation"""
        lines = [
            f"Schema: {validation_result['schema_used']}",
            f"Status: {'VALID' if validation_result['is_valid'] else 'INVALID'}",
        ]
        for error in validation_result['errors']:
            if isinstance(error, dict):
                path = "/".join(str(p) for p in error.get('error_path', []))
                lines.append(f"  error at /{path}: {error['error_message']}")
            else:
                lines.append(f"  error: {error}")
        for warning in validation_result['warnings']:
            lines.append(f"  warning: {warning}")
        return "\n".join(lines)
