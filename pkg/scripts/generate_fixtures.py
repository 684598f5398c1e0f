#!/usr/bin/env python3
"""
Hopf YD Verifier - Générateur de fixtures
Régénère data/fixtures/ depuis les constructions intégrées, puis applique les corruptions documentées
"""

import os
import sys
from pathlib import Path

import numpy as np

sys.path.insert(0, str(Path(__file__).resolve().parent.parent))

from src.core.field import Field  # noqa: E402
from src.data.serializer import dump_hopf_algebra, dump_module, write_document  # noqa: E402
from src.hopf.automorphisms import HopfAutomorphism  # noqa: E402
from src.hopf.builtins import build_builtin  # noqa: E402
from src.modules.yd_module import build_H_alpha_beta  # noqa: E402

FIXTURES = Path('data/fixtures')


def _with_algebra_ref(document, ref):
    document = dict(document)
    document['algebra'] = ref
    document['component'] = [c['name'] for c in document['component']]
    return document


def generate_fixtures():
    """Génère les fichiers d'entrée de démonstration et de non-régression"""

    os.makedirs(FIXTURES, exist_ok=True)
    field = Field.rationals()
    print("Génération des fixtures...")

    write_document({"builtin": "sweedler4", "field": field.to_descriptor()}, FIXTURES / 'sweedler4.json')
    H = build_builtin({"builtin": "sweedler4"}, field)
    identity = HopfAutomorphism.identity(H)

    # 1. Antipode remplacée par l'identité : échec de m∘(S⊗id)∘Δ en x
    corrupted = dump_hopf_algebra(H)
    corrupted['name'] = 'sweedler4_corrupted_antipode'
    corrupted['antipode'] = [[i, i, "1"] for i in range(H.dim)]
    corrupted['antipode_inv'] = [[i, i, "1"] for i in range(H.dim)]
    write_document(corrupted, FIXTURES / 'sweedler4_corrupted_antipode.json')

    # 2. H_{id,id} correct, puis étiqueté (S²,id)
    regular = dump_module(build_H_alpha_beta(H, identity, identity))
    regular['name'] = 'H_id_id'
    write_document(_with_algebra_ref(regular, 'sweedler4.json'), FIXTURES / 'sweedler4_regular_module.json')
    mislabeled = _with_algebra_ref(regular, 'sweedler4.json')
    mislabeled['name'] = 'H_id_id_mislabeled'
    mislabeled['component'] = ['S^2', 'id']
    write_document(mislabeled, FIXTURES / 'sweedler4_mislabeled_module.json')

    # 3. k[C_2] avec Δ(g) = g⊗g + g⊗1
    cyclic = dump_hopf_algebra(build_builtin({"builtin": "cyclic", "n": 2}, field))
    cyclic['name'] = 'cyclic2_noncoassociative'
    cyclic['comul'] = cyclic['comul'] + [[1, 1, 0, "1"]]
    write_document(cyclic, FIXTURES / 'cyclic2_noncoassociative.json')

    # 4. Automorphisme x ↦ 2x de H4
    scale = np.diag([1, 1, 2, 2])
    write_document({
        "kind": "automorphisms",
        "algebra": "sweedler4.json",
        "automorphisms": [{"name": "scale2", "matrix": field.to_sparse(field.array(scale))}],
    }, FIXTURES / 'sweedler4_automorphisms.json')

    print(f"Fixtures écrites dans {FIXTURES}/")


if __name__ == "__main__":
    generate_fixtures()
