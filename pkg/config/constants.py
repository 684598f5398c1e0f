"""
Hopf YD Verifier - Constantes
Registre des vérifications : chaque identifiant de base pointe vers l'identité vérifiée
"""

# === REGISTRE DES VÉRIFICATIONS ===
CHECK_ANCHORS = {
    # noyau
    "kernel.coproduct_bracketing": "(Δ⊗id)∘Δ = (id⊗Δ)∘Δ for iterated coproducts",
    # algèbres de Hopf
    "hopf.associativity": "m∘(m⊗id) = m∘(id⊗m)",
    "hopf.unit": "m(1⊗h) = h = m(h⊗1)",
    "hopf.coassociativity": "(Δ⊗id)∘Δ = (id⊗Δ)∘Δ",
    "hopf.counit": "(ε⊗id)∘Δ = id = (id⊗ε)∘Δ",
    "hopf.bialgebra": "Δ(hl) = Δ(h)Δ(l), ε(hl) = ε(h)ε(l), Δ(1) = 1⊗1, ε(1) = 1",
    "hopf.antipode_left": "m∘(S⊗id)∘Δ = η∘ε",
    "hopf.antipode_right": "m∘(id⊗S)∘Δ = η∘ε",
    "hopf.antipode_inverse": "S⁻¹∘S = id = S∘S⁻¹",
    "hopf.automorphism": "θ∘m = m∘(θ⊗θ), θ(1) = 1, (θ⊗θ)∘Δ = Δ∘θ, ε∘θ = ε, θ∘S = S∘θ",
    "hopf.regular_action_left": "(hh′)⇀p = h⇀(h′⇀p), 1⇀p = p, (h⇀p)(l) = p(lh)",
    "hopf.regular_action_right": "p↼(hh′) = (p↼h)↼h′, p↼1 = p, (p↼h)(l) = p(hl)",
    "hopf.double_dual": "(H*)* = H under e_i ↦ e_i",
    "hopf.dual_basis": "e^i(e_j) = δ_ij, Σ e_i e^i(h) = h",
    # modules de Yetter-Drinfeld
    "yd.module": "1·m = m, (hh′)·m = h·(h′·m)",
    "yd.comodule": "(id⊗ε)∘ρ = id, (ρ⊗id)∘ρ = (id⊗Δ)∘ρ",
    "yd.compat": "(h·m)_(0)⊗(h·m)_(1) = h_2·m_(0) ⊗ β(h_3)m_(1)α(S⁻¹(h_1))",
    "yd.compat_alt": "h_1·m_(0) ⊗ β(h_2)m_(1) = (h_2·m)_(0) ⊗ (h_2·m)_(1)α(h_1)",
    "yd.compat_agree": "both compatibility forms give the same verdict",
    "yd.anti_yd": "(h·m)_(0)⊗(h·m)_(1) = h_2·m_(0) ⊗ h_3m_(1)S(h_1)",
    "yd.l_yd": "(h·m)_(0)⊗(h·m)_(1) = h_2·m_(0) ⊗ h_3m_(1)S^(2l−1)(h_1)",
    "yd.specialization_agree": "specialized compatibility verdict = general verdict in (S^2l, id)",
    "yd.equivalence_perturbed": "both compatibility forms agree on perturbed module/comodule data",
    "yd.morphism": "φ(h·m) = h·φ(m), ρ_N∘φ = (φ⊗id)∘ρ_M",
    # T-catégorie
    "tcat.group_assoc": "((α,β)∗(γ,δ))∗(μ,ν) = (α,β)∗((γ,δ)∗(μ,ν)) with (α,β)∗(γ,δ) = (αγ, δγ⁻¹βγ)",
    "tcat.group_unit": "(id,id)∗p = p = p∗(id,id)",
    "tcat.group_inverse": "p∗p⁻¹ = (id,id) = p⁻¹∗p with (α,β)⁻¹ = (α⁻¹, αβ⁻¹α⁻¹)",
    "tcat.tensor_compat": "h·(m⊗n) = γ(h_1)·m ⊗ γ⁻¹βγ(h_2)·n, ρ(m⊗n) = m_(0)⊗n_(0)⊗n_(1)m_(1) is compatible in p∗q",
    "tcat.tensor_unit": "M⊗k = M = k⊗M",
    "tcat.tensor_assoc": "(M⊗N)⊗P = M⊗(N⊗P)",
    "tcat.conjugate_compat": "h⇀n = γ⁻¹βγα⁻¹(h)·n, n ↦ n_(0)⊗αβ⁻¹(n_(1)) is compatible in p∗q∗p⁻¹",
    "tcat.conjugate_composite": "^(p∗q)N = ^p(^qN)",
    "tcat.conjugate_tensor": "^p(M⊗N) = ^pM ⊗ ^pN",
    "tcat.conjugate_functorial": "φ: M → N morphism ⇒ φ: ^pM → ^pN morphism",
    "tcat.braiding_morphism": "c_{M,N}(m⊗n) = n_(0) ⊗ β⁻¹(n_(1))·m is H-linear H-colinear",
    "tcat.braiding_inverse": "c⁻¹(n⊗m) = β⁻¹(S(n_(1)))·m ⊗ n_(0), c⁻¹∘c = id, c∘c⁻¹ = id",
    "tcat.braiding_conjugation": "c_{^pM,^pN} = c_{M,N}",
    "tcat.hexagon_objects": "^M(^NP) = ^(M⊗N)P, ^M(N⊗P) = ^MN ⊗ ^MP",
    "tcat.hexagon_left": "c_{M⊗N,P} = (c_{M,^NP}⊗id_N)∘(id_M⊗c_{N,P})",
    "tcat.hexagon_right": "c_{M,N⊗P} = (id_{^MN}⊗c_{M,P})∘(c_{M,N}⊗id_P)",
    "tcat.dual_compat": "M*, *M lie in (α⁻¹, αβ⁻¹α⁻¹) and are compatible",
    "tcat.dual_morphisms": "b and d are morphisms in component (id,id)",
    "tcat.left_dual_snake": "(id_M⊗d)(b⊗id_M) = id_M, (d⊗id_M*)(id_M*⊗b) = id_M*",
    "tcat.right_dual_snake": "(d⊗id_M)(id_M⊗b) = id_M, (id_*M⊗d)(b⊗id_*M) = id_*M",
    # produits croisés diagonaux et double de Drinfeld
    "dcp.bicomodule": "λ, ρ coassociative counital algebra maps with (λ⊗id)∘ρ = (id⊗ρ)∘λ",
    "dcp.datum_compat": "(a·m)_(0)⊗(a·m)_(1) = a_{0}·m_(0) ⊗ a_{1}m_(1)S⁻¹(a_{−1})",
    "dcp.datum_compat_alt": "a_<0>·m_(0) ⊗ a_<1>m_(1) = (a_[0]·m)_(0) ⊗ (a_[0]·m)_(1)a_[−1]",
    "dcp.datum_agree": "both datum compatibility forms give the same verdict",
    "dcp.crossed_algebra": "(p⋈a)(q⋈b) = p(a_{−1}⇀q↼S⁻¹(a_{1}))⋈a_{0}b is associative with unit ε⋈1",
    "dcp.crossed_specialization": "in H*⋈H(α,β): (p⋈h)(q⋈l) = p(α(h_1)⇀q↼S⁻¹(β(h_3)))⋈h_2l",
    "dcp.anti_yd_algebra": "in A(H) = H*⋈H(S²,id): (p⋈h)(q⋈l) = p(S²(h_1)⇀q↼S⁻¹(h_3))⋈h_2l",
    "dcp.r_invertible": "R·R⁻¹ = 1⊗1 = R⁻¹·R",
    "dcp.r_intertwines": "R·Δ(x) = Δ^cop(x)·R",
    "dcp.r_coproduct_left": "(Δ⊗id)(R) = R₁₃R₂₃",
    "dcp.r_coproduct_right": "(id⊗Δ)(R) = R₁₃R₁₂",
    "dcp.module_axioms": "(ε⋈1)·m = m, (xy)·m = x·(y·m)",
    "dcp.module_roundtrip": "(p⋈h)·m = p((h·m)_(1))(h·m)_(0) inverted by h·m = (ε⋈h)·m, m ↦ (e^i⋈1)·m⊗e_i",
    "dcp.dh_bicomodule": "p⋈h ↦ (p_2⋈h_1)⊗(p_1⊗β(h_2)), p⋈h ↦ (p_2⊗α(h_1))⊗(p_1⋈h_2) make A(α,β) a D(H)-bicomodule algebra",
    # T-coalgèbre DT(H)
    "dt.delta_algebra": "Δ_{p,q}(xy) = Δ_{p,q}(x)Δ_{p,q}(y), Δ_{p,q}(1) = 1⊗1",
    "dt.delta_coassoc": "(Δ_{p,q}⊗id)∘Δ_{p∗q,r} = (id⊗Δ_{q,r})∘Δ_{p,q∗r}",
    "dt.delta_counit": "(ε⊗id)∘Δ_{(id,id),p} = id = (id⊗ε)∘Δ_{p,(id,id)}",
    "dt.phi_algebra": "φ_p^q bijective, φ_p^q(xy) = φ_p^q(x)φ_p^q(y), φ_p^q(1) = 1",
    "dt.phi_group": "φ_{p∗p′}^q = φ_p^{p′∗q∗p′⁻¹}∘φ_{p′}^q",
    "dt.phi_delta": "(φ_p⊗φ_p)∘Δ_{q,r} = Δ_{p∗q∗p⁻¹,p∗r∗p⁻¹}∘φ_p",
    "dt.phi_counit": "ε∘φ_p = ε on DT(H)_(id,id)",
    "dt.antipode": "m∘(S_{p⁻¹}⊗id)∘Δ_{p⁻¹,p} = 1_p ε = m∘(id⊗S_{p⁻¹})∘Δ_{p,p⁻¹}",
    "dt.antipode_unit_component": "S_(id,id) = S_D(H)",
    "dt.r_invertible": "R_{p,q}·R_{p,q}⁻¹ = 1⊗1 = R_{p,q}⁻¹·R_{p,q}",
    "dt.rep_tensor": "Δ_{p,q}-induced module on M⊗N = M⊗N in YD(H)",
    "dt.rep_conjugation": "φ_p-pullback of N = ^pN",
    "dt.rep_braiding": "flip∘(R_{p,q}·) = c_{M,N}",
    # paires en involution
    "pii.pair": "α(h) = g⁻¹ f(h_1) β(h_2) f(S(h_3)) g",
    "pii.functor_compat": "F(M) lies in (id,id), G(N) lies in (α,β), both compatible",
    "pii.functor_inverse": "F(G(N)) = N, G(F(M)) = M",
    "pii.functor_morphisms": "F and G are the identity on morphisms",
    "pii.g_factorization": "G(N) = _fk^g ⊗ N",
    "pii.algebra_iso": "p⊗h ↦ g⁻¹⇀p ⋈ f(β⁻¹(S(h_1)))β⁻¹(h_2) and p⋈h ↦ g⇀p ⊗ f(h_1)β(h_2) are inverse algebra maps",
    "pii.transport": "pullback along D(H) → H*⋈H(α,β) of M = D(H)-module of F(M)",
    "pii.alpha_alpha": "(ε,1) gives YD(α,α) ≅ YD(id,id)",
    "pii.anti_yd_factorization": "M = G(F(M)) = _fk^g ⊗ F(M)",
}

# === ALGÈBRES INTÉGRÉES ===
BUILTIN_ALGEBRAS = ("sweedler4", "cyclic", "symmetric", "group_algebra", "dual_of")

SUITES = ("hopf", "yd", "tcategory", "double", "dt", "pii")

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_MALFORMED = 2


def anchor_for(check_id: str) -> str:
    """Identité associée à un identifiant de vérification (qualificatif [..] ignoré)"""
    base = check_id.split("[", 1)[0]
    return CHECK_ANCHORS[base]
