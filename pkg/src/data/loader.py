"""
Hopf YD Verifier - Input Loader
Lecture et validation des fichiers d'entrée : algèbres de Hopf, automorphismes, modules
"""
import hashlib
import json
from dataclasses import dataclass, field as dc_field
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Tuple, Union
import logging

import numpy as np

from config.settings import VERIFICATION_CONFIG
from src.core import linalg
from src.core.exceptions import AxiomViolationError, MalformedInputError, SingularMatrixError
from src.core.field import Field
from src.data.validators.schema_validator import InputSchemaValidator
from src.hopf.algebra import HopfAlgebraData
from src.hopf.automorphisms import HopfAutomorphism, standard_automorphisms
from src.hopf.axioms import validate_hopf_algebra
from src.hopf.builtins import build_builtin
from src.modules.compatibility import check_module_axioms
from src.modules.component import GroupElementG
from src.modules.yd_module import YDModule

logger = logging.getLogger(__name__)

PathLike = Union[str, Path]


@dataclass
class ParsedInputs:
    """Objets validés, dans l'ordre des fichiers, avec l'empreinte de chaque fichier"""
    algebras: List[HopfAlgebraData] = dc_field(default_factory=list)
    automorphisms: Dict[str, List[HopfAutomorphism]] = dc_field(default_factory=dict)
    modules: List[YDModule] = dc_field(default_factory=list)
    digests: Dict[str, str] = dc_field(default_factory=dict)

    def add_algebra(self, H: HopfAlgebraData) -> HopfAlgebraData:
        for known in self.algebras:
            if known.key() == H.key():
                return known
        self.algebras.append(H)
        return H


def file_digest(path: PathLike) -> str:
    return hashlib.sha256(Path(path).read_bytes()).hexdigest()


class InputLoader:
    """
    Chargeur de documents JSON. Avec validate=True chaque objet est vérifié à la
    construction (axiomes de Hopf, automorphismes, module et comodule) et une
    violation lève AxiomViolationError ; sinon seules la syntaxe et les formes sont
    contrôlées, les axiomes restant à la charge des suites.
    """

    def __init__(self, field: Optional[Field] = None, validate: bool = True,
                 l_max: Optional[int] = None):
        self.field = field
        self.validate = validate
        self.l_max = int(VERIFICATION_CONFIG.get('l_max', 1) if l_max is None else l_max)
        self.schema_validator = InputSchemaValidator()
        self._algebra_files: Dict[Path, HopfAlgebraData] = {}

    # === DOCUMENTS ===
    def read_document(self, path: PathLike) -> Dict[str, Any]:
        path = Path(path)
        try:
            with open(path, 'r', encoding='utf-8') as f:
                document = json.load(f)
        except FileNotFoundError as e:
            raise MalformedInputError(f"input file not found: {path}") from e
        except json.JSONDecodeError as e:
            raise MalformedInputError(f"{path}: invalid JSON at line {e.lineno}: {e.msg}") from e
        if not isinstance(document, dict):
            raise MalformedInputError(f"{path}: top-level value must be an object")
        return document

    def check_schema(self, document: Dict[str, Any], source: str = "<document>") -> str:
        schema_name = self.schema_validator.detect_schema(document)
        if schema_name is None:
            raise MalformedInputError(f"{source}: unknown document kind {document.get('kind')!r}")
        result = self.schema_validator.validate_data(document, schema_name)
        for warning in result['warnings']:
            logger.warning(f"{source}: {warning}")
        if not result['is_valid']:
            logger.warning(f"{source}:\n{self.schema_validator.get_validation_report(result)}")
            first = result['errors'][0]
            message = first['error_message'] if isinstance(first, dict) else str(first)
            path = "/".join(str(p) for p in first.get('error_path', [])) if isinstance(first, dict) else ""
            raise MalformedInputError(f"{source}: schema '{schema_name}' violated at /{path}: {message}")
        return schema_name

    # === ALGÈBRES ===
    def parse_hopf_algebra(self, document: Dict[str, Any], source: str = "<document>") -> HopfAlgebraData:
        schema_name = self.check_schema(document, source)
        if schema_name == 'builtin':
            H = build_builtin(document, self.field)
        elif schema_name == 'hopf_algebra':
            H = self._from_structure_constants(document, source)
        else:
            raise MalformedInputError(f"{source}: expected a Hopf algebra, got '{schema_name}'")
        if self.validate:
            validate_hopf_algebra(H)
        logger.info(f"Loaded Hopf algebra {H.name} (dim {H.dim}) from {source}")
        return H

    def _from_structure_constants(self, document: Dict[str, Any], source: str) -> HopfAlgebraData:
        field = Field.from_descriptor(document['field'])
        basis = tuple(document['basis'])
        d = len(basis)
        if document['dim'] != d:
            raise MalformedInputError(f"{source}: dim={document['dim']} but {d} basis labels")
        for key in ('unit', 'counit'):
            if len(document[key]) != d:
                raise MalformedInputError(f"{source}: '{key}' has {len(document[key])} entries, expected {d}")

        mul = field.from_sparse((d, d, d), document['mul'])
        comul = field.from_sparse((d, d, d), document['comul'])
        unit = np.asarray([field.element(x) for x in document['unit']], dtype=object)
        counit = np.asarray([field.element(x) for x in document['counit']], dtype=object)
        antipode = field.from_sparse((d, d), document['antipode'])
        if 'antipode_inv' in document:
            antipode_inv = field.from_sparse((d, d), document['antipode_inv'])
        else:
            try:
                antipode_inv = linalg.inverse(field, antipode)
            except SingularMatrixError as e:
                raise AxiomViolationError(f"hopf.antipode_inverse[{document.get('name', 'H')}]") from e
        return HopfAlgebraData(field, basis, mul, unit, comul, counit, antipode, antipode_inv,
                               name=document.get('name', Path(source).stem or 'H'))

    def resolve_algebra(self, ref: Union[str, Dict[str, Any]], base_dir: Path, source: str) -> HopfAlgebraData:
        """Référence d'algèbre : document en ligne, ou chemin relatif au fichier qui la cite"""
        if isinstance(ref, dict):
            return self.parse_hopf_algebra(ref, f"{source}#algebra")
        path = (base_dir / ref).resolve()
        if path not in self._algebra_files:
            self._algebra_files[path] = self.parse_hopf_algebra(self.read_document(path), str(path))
        return self._algebra_files[path]

    # === AUTOMORPHISMES ===
    def known_automorphisms(self, H: HopfAlgebraData) -> List[HopfAutomorphism]:
        """id, S^2l (l ≤ l_max) et, pour une algèbre de groupe, les automorphismes du groupe"""
        group_auts = H.group.automorphisms() if H.group is not None else ()
        return standard_automorphisms(H, self.l_max, group_auts)

    def parse_automorphism(self, H: HopfAlgebraData, entry: Dict[str, Any]) -> HopfAutomorphism:
        matrix = H.field.from_sparse((H.dim, H.dim), entry['matrix'])
        return HopfAutomorphism.from_matrix(H, matrix, entry['name'], verify=self.validate)

    def parse_automorphisms(self, document: Dict[str, Any], base_dir: Path = Path('.'),
                            source: str = "<document>",
                            H: Optional[HopfAlgebraData] = None) -> Tuple[HopfAlgebraData, List[HopfAutomorphism]]:
        self.check_schema(document, source)
        if 'algebra' in document:
            H = self.resolve_algebra(document['algebra'], base_dir, source)
        if H is None:
            raise MalformedInputError(f"{source}: automorphisms need an 'algebra'")
        return H, [self.parse_automorphism(H, entry) for entry in document['automorphisms']]

    # === MODULES ===
    def _resolve_component_ref(self, H: HopfAlgebraData, ref: Union[str, Dict[str, Any]],
                               known: Sequence[HopfAutomorphism], source: str) -> HopfAutomorphism:
        if isinstance(ref, dict):
            return self.parse_automorphism(H, ref)
        for theta in known:
            if theta.name == ref:
                return theta
        raise MalformedInputError(
            f"{source}: unknown automorphism {ref!r}; known: {[t.name for t in known]}"
        )

    def parse_module(self, document: Dict[str, Any], base_dir: Path = Path('.'),
                     source: str = "<document>",
                     automorphisms: Sequence[HopfAutomorphism] = ()) -> YDModule:
        self.check_schema(document, source)
        H = self.resolve_algebra(document['algebra'], base_dir, source)
        known = list(automorphisms) + self.known_automorphisms(H)
        alpha, beta = (self._resolve_component_ref(H, ref, known, source) for ref in document['component'])
        basis = tuple(document['basis'])
        n = len(basis)
        field = H.field
        action = field.from_sparse((H.dim, n, n), document['action'])
        coaction = field.from_sparse((n, n, H.dim), document['coaction'])
        M = YDModule(H, GroupElementG(alpha, beta), action, coaction, basis,
                     name=document.get('name', Path(source).stem or 'M'))
        if self.validate:
            for failure in check_module_axioms(M).failures:
                raise AxiomViolationError(failure.check_id, failure.counterexample)
        logger.info(f"Loaded module {M.name} (dim {M.dim}) in {M.component.name} from {source}")
        return M

    # === FICHIERS ===
    def load_file(self, path: PathLike, inputs: ParsedInputs) -> None:
        path = Path(path)
        document = self.read_document(path)
        source = str(path)
        kind = self.schema_validator.detect_schema(document)
        base_dir = path.resolve().parent
        if kind in ('builtin', 'hopf_algebra'):
            inputs.add_algebra(self.parse_hopf_algebra(document, source))
        elif kind == 'automorphisms':
            H, auts = self.parse_automorphisms(document, base_dir, source)
            H = inputs.add_algebra(H)
            inputs.automorphisms.setdefault(H.name, []).extend(auts)
        elif kind == 'yd_module':
            module = self.parse_module(document, base_dir, source,
                                       [a for auts in inputs.automorphisms.values() for a in auts])
            inputs.add_algebra(module.H)
            inputs.modules.append(module)
        else:
            raise MalformedInputError(f"{source}: unknown document kind {document.get('kind')!r}")
        inputs.digests[source] = file_digest(path)


def parse_inputs(paths: Sequence[PathLike], field: Optional[Field] = None, validate: bool = True,
                 l_max: Optional[int] = None) -> ParsedInputs:
    """Charge les fichiers dans l'ordre donné ; les automorphismes précèdent les modules qui les citent"""
    loader = InputLoader(field, validate, l_max)
    inputs = ParsedInputs()
    for path in paths:
        loader.load_file(path, inputs)
    return inputs
