#include "whopf/catalog.hpp"

#include <algorithm>
#include <sstream>

namespace whopf {

namespace {

std::vector<IdentityEntry> build() {
  std::vector<IdentityEntry> e;
  auto add = [&](const std::string& module, const std::string& label, const std::string& formula = "") {
    e.push_back({module, label, formula.empty() ? label : formula});
  };

  add("structure", "associativity", "mu.(mu@A) = mu.(A@mu)");
  add("structure", "left unit", "mu.(eta@A) = A");
  add("structure", "right unit", "mu.(A@eta) = A");
  add("structure", "coassociativity", "(delta@C).delta = (C@delta).delta");
  add("structure", "left counit", "(eps@C).delta = C");
  add("structure", "right counit", "(C@eps).delta = C");
  add("structure", "(a1)", "delta.mu = (mu@mu).delta_{H@H}");
  add("structure", "(a2) first form", "eps.mu.(mu@H) = (eps.mu@eps.mu).(H@delta@H)");
  add("structure", "(a2) second form", "eps.mu.(mu@H) = (eps.mu@eps.mu).(H@c.delta@H)");
  add("structure", "(a3) first form", "(delta@H).delta.eta = (H@mu@H).(delta.eta@delta.eta)");
  add("structure", "(a3) second form", "(delta@H).delta.eta = (H@mu.c@H).(delta.eta@delta.eta)");
  add("structure", "(a4-1)", "id*lambda = PiL");
  add("structure", "(a4-2)", "lambda*id = PiR");
  add("structure", "(a4-3)", "lambda*id*lambda = lambda");
  add("structure", "antipode antimultiplicative", "lambda.mu = mu.(lambda@lambda).c");
  add("structure", "antipode anticomultiplicative", "delta.lambda = c.(lambda@lambda).delta");
  add("structure", "antipode unit", "lambda.eta = eta");
  add("structure", "antipode counit", "eps.lambda = eps");
  for (std::string p : {"PiL", "PiR", "PiLbar", "PiRbar"}) add("structure", p + " idempotent", p + "." + p + " = " + p);
  add("structure", "PiL=id*lambda");
  add("structure", "PiR=lambda*id");
  add("structure", "PiL*PiL=PiL");
  add("structure", "PiR*PiR=PiR");
  add("structure", "PiL.PiLbar=PiL");
  add("structure", "PiL.PiRbar=PiRbar");
  add("structure", "PiR.PiLbar=PiLbar");
  add("structure", "PiR.PiRbar=PiR");
  add("structure", "PiLbar.PiL=PiLbar");
  add("structure", "PiLbar.PiR=PiR");
  add("structure", "PiRbar.PiL=PiL");
  add("structure", "PiRbar.PiR=PiRbar");
  add("structure", "PiL=PiRbar.lambda=lambda.PiLbar");
  add("structure", "PiR=PiLbar.lambda=lambda.PiRbar");
  add("structure", "PiL.lambda=PiL.PiR=lambda.PiR");
  add("structure", "PiR.lambda=PiR.PiL=lambda.PiL");
  add("structure", "PiL-mu", "mu.(H@PiL) = ((eps.mu)@H).(H@c).(delta@H)");
  add("structure", "PiR-mu", "mu.(PiR@H) = (H@(eps.mu)).(c@H).(H@delta)");
  add("structure", "PiLbar-mu", "mu.(H@PiLbar) = (H@(eps.mu)).(delta@H)");
  add("structure", "PiRbar-mu", "mu.(PiRbar@H) = ((eps.mu)@H).(H@delta)");
  add("structure", "delta-PiL", "(H@PiL).delta = (mu@H).(H@c).(delta.eta@H)");
  add("structure", "delta-PiR", "(PiR@H).delta = (H@mu).(c@H).(H@delta.eta)");
  add("structure", "delta-PiLbar", "(PiLbar@H).delta = (H@mu).(delta.eta@H)");
  add("structure", "delta-PiRbar", "(H@PiRbar).delta = (mu@H).(H@delta.eta)");
  add("structure", "PiL-mu-PiL", "PiL.mu.(H@PiL) = PiL.mu");
  add("structure", "PiR-mu-PiR", "PiR.mu.(PiR@H) = PiR.mu");
  add("structure", "PiL-delta-PiL", "(H@PiL).delta.PiL = delta.PiL");
  add("structure", "PiR-delta-PiR", "(PiR@H).delta.PiR = delta.PiR");

  add("comodule", "comodule counit", "(A@eps).rho = A");
  add("comodule", "comodule coassociativity", "(rho@H).rho = (A@delta).rho");
  add("comodule", "multiplicativity", "rho.mu = mu_{A@H}.(rho@rho)");
  add("comodule", "(b1)", "(A@PiL).rho = (mu@H).(A@c).(rho.eta@A)");
  add("comodule", "(b2)", "(A@PiRbar).rho = (mu@H).(A@rho.eta)");
  add("comodule", "(b3)", "(A@PiL).rho.eta = rho.eta");
  add("comodule", "(b4)", "(A@PiRbar).rho.eta = rho.eta");
  add("comodule", "(b5)", "(rho@H).rho.eta = (A@mu@H).(rho@delta).(eta@eta)");
  add("comodule", "(b6)", "(rho@H).rho.eta = (A@mu.c@H).(rho@delta).(eta@eta)");
  add("comodule", "entwining a", "Gamma.(H@mu) = (mu@H).(A@Gamma).(Gamma@A)");
  add("comodule", "entwining b", "(A@delta).Gamma = (Gamma@H).(H@Gamma).(delta@A)");
  add("comodule", "entwining c", "Gamma.(H@eta) = (e_A@H).delta");
  add("comodule", "entwining d", "(A@eps).Gamma = mu.(e_A@A)");
  add("comodule", "entwined module", "rho.mu = (mu@H).(A@Gamma).(rho@A)");
  add("comodule", "zeta=(A@PiL).rho");
  add("comodule", "(c1)", "finv*f = e_A");
  add("comodule", "(c2)", "f*finv = (A@(eps.mu)).(rho@H).(eta@H)");
  add("comodule", "(c3)", "finv*f*finv = finv");
  add("comodule", "integral", "rho.f = (f@H).delta");
  add("comodule", "convolution inverse", "finv exists with (c1)-(c3)");
  add("comodule", "h integral", "rho.h = (h@H).delta for the totalized h");
  add("comodule", "h total", "h.eta = eta");
  add("comodule", "h=f*(finv.PiRbar)");
  add("comodule", "hinv=(f.PiR)*finv");
  add("comodule", "finv(1)f(1)=1", "mu.((finv.eta)@(f.eta)) = eta");
  add("comodule", "f*finv factors through A_H");
  add("comodule", "q_A factors through A_H", "q_A = mu.(A@finv).rho lands in A_H");
  add("comodule", "rho.finv=(finv@lambda).c.delta");
  add("comodule", "weak cleft", "Gamma.(H@finv).delta = (A@PiRbar).rho.finv");
  add("comodule", "mu.(A@e_A).rho=id");
  add("comodule", "mu.(q_A@f).rho=id");
  add("comodule", "rho.mu via q_A", "rho.mu.(i_A@f) = (mu.(i_A@f)@H).(A_H@delta)");
  add("comodule", "mu.(i_A@f) via q_A", "mu.(i_A@f).(p_A@H).rho = A");
  add("comodule", "p_A is A_H-linear", "p_A.mu.(i_A@A) = mu.(A_H@p_A)");
  add("comodule", "T multiplicative", "T.mu = mu.(T@T)");
  add("comodule", "T unital", "T.eta = eta");
  add("comodule", "T colinear", "rho.T = (T@H).rho");
  add("comodule", "T.Tinv=id");
  add("comodule", "Tinv.T=id");
  add("comodule", "T.i_A=i_B.J");

  add("maction", "(d1)", "phi.(eta@A) = A");
  add("maction", "(d2)", "phi.(H@mu) = mu.(phi@phi).(H@c@A).(delta@A@A)");
  add("maction", "(d3)", "phi.(mu@eta) = phi.(H@u1)");
  add("maction", "(d4)", "phi.(PiL@A) = mu.(u1@A)");
  add("maction", "(d5)", "phi.(PiLbar@A) = mu.c.(u1@A)");
  add("maction", "(d6)", "phi.(PiL@eta) = u1");
  add("maction", "(d7)", "phi.(PiLbar@eta) = u1");
  add("maction", "(d8)", "phi.(H@u1) = (u1@(eps.mu)).(delta@H)");
  add("maction", "(d9)", "phi.(H@u1) = ((eps.mu)@u1).(H@c).(delta@H)");
  add("maction", "u2=u1.mu");
  add("maction", "mu.(u1@phi).(delta@A)=phi");
  add("maction", "(A@eps).psi.(H@eta)=u1");
  add("maction", "u1 central", "mu.(u1@A) = mu.c.(u1@A)");
  add("maction", "OmegaL idempotent", "OmegaL.OmegaL = OmegaL");
  add("maction", "OmegaR idempotent", "OmegaR.OmegaR = OmegaR");
  add("maction", "mu.OmegaL=mu");
  add("maction", "mu.OmegaR=mu");
  add("maction", "OmegaL module form 1", "phi.(mu@A).(OmegaL@A) = phi.(mu@A)");
  add("maction", "OmegaL module form 2", "phi.(H@phi).(OmegaL@A) = phi.(H@phi)");
  add("maction", "OmegaL=OmegaR");
  add("maction", "Omega.delta left", "(OmegaL@H@H).delta_{H@H} = (H@H@OmegaL).delta_{H@H}");
  add("maction", "Omega.delta right", "(OmegaL@H@H).delta_{H@H} = delta_{H@H}.OmegaL");
  add("maction", "(e1) left", "h*hinv = u1");
  add("maction", "(e1) right", "hinv*h = u1");
  add("maction", "(e2)", "h*hinv*h = h");
  add("maction", "(e3)", "hinv*h*hinv = hinv");
  add("maction", "(f1) left", "sigma*sigmainv = u2");
  add("maction", "(f1) right", "sigmainv*sigma = u2");
  add("maction", "(f2)", "sigma*sigmainv*sigma = sigma");
  add("maction", "(f3)", "sigmainv*sigma*sigmainv = sigmainv");
  add("maction", "unit conditions agree", "the normalization conditions on units hold together or fail together");
  add("maction", "left conditions agree", "the left normalization conditions on sigma hold together or fail together");
  add("maction", "right conditions agree", "the right normalization conditions on sigma hold together or fail together");
  add("maction", "h.eta=eta iff hinv.eta=eta");
  add("maction", "sigma.(eta@H)=u1 iff sigmainv.(eta@H)=u1");
  add("maction", "sigma.(H@eta)=u1 iff sigmainv.(H@eta)=u1");
  add("maction", "sigma.Omega=sigma");
  add("maction", "sigmainv.Omega=sigmainv");
  add("maction", "phi=p_A.mu.(f@i_A)", "phi = p_A.mu.(mu@A).(f@i_A@finv).(H@c).(delta@A_H)");
  add("maction", "phi.(PiLbar@A_H)=phi iff f central on A_H");
  add("maction", "phi.(PiL@A_H)=phi iff finv central on A_H");
  add("maction", "Z(A_H) commutative");
  add("maction", "phi_Z strict", "phi_Z.(mu@Z) = phi_Z.(H@phi_Z)");
  add("maction", "mu.(finv@i_A) via psi", "mu.(finv@i_A) = mu.(psi_A@finv).(H@c).(delta@A_H)");
  add("maction", "mu.c.(f@i_A) via psi", "mu.c.(f@i_A) = mu.(f@psi_A).(delta@A_H)");
  add("maction", "phi.(H@psi).(delta@A_H)", "phi.(H@psi).(delta@Z) = mu.((phi.(H@eta))@Z)");

  add("crossed", "twisted on A@H", "(g1) on the lifted maps psi and sigmaLift");
  add("crossed", "(g1)", "mu.(A@phi).(sigma@mu@A).(delta_{H@H}@A) = mu.(phi.(H@phi)@A).(H@H@c).(H@H@sigma@A).(delta_{H@H}@A)");
  add("crossed", "twisted forms agree", "lifted and scalar forms of (g1) agree");
  add("crossed", "cocycle on A@H", "(mu@H).(A@sigmaLift).(sigmaLift@H) = (mu@H).(A@sigmaLift).(psi@H).(H@sigmaLift)");
  add("crossed", "cocycle on sigma", "mu.(A@sigma).(sigmaLift@H) = mu.(A@sigma).(psi@H).(H@sigmaLift)");
  add("crossed", "(g2)", "(phi.(H@sigma).(OmegaL@H)) * (sigma.(H@mu)) = ((sigma@eps).(H@OmegaL)) * (sigma.(mu@H))");
  add("crossed", "cocycle forms agree", "all forms of (g2) agree");
  add("crossed", "(g2) without Omega", "(phi.(H@sigma)) * (sigma.(H@mu)) = (sigma@eps) * (sigma.(mu@H))");
  add("crossed", "(g2) with sigmainv on both sides", "mu.(phi.(H@sigmainv)@sigma).(H@H@c@H).(H@H@H@c).(delta_{H@H}@H) = mu.(sigma@sigmainv).(H@mu@mu@H).delta_{H@H@H}");
  add("crossed", "(g2) with sigmainv on the left", "mu.(sigmainv@phi.(H@sigma)).(delta_{H@H}@H) = (sigma.(mu@H)) * (sigmainv.(H@mu))");
  add("crossed", "cocommutative cocycle forms agree", "the cocommutative forms of (g2) agree");
  add("crossed", "(g3) right", "sigma.(H@eta) = u1");
  add("crossed", "(g3) left", "sigma.(eta@H) = u1");
  add("crossed", "nabla=(mu.(A@u1)@H).(A@delta)");
  add("crossed", "nabla idempotent", "nabla.nabla = nabla");
  add("crossed", "nabla left A-linear", "nabla.(mu@H) = (mu@H).(A@nabla)");
  add("crossed", "nabla colinear", "(A@delta).nabla = (nabla@H).(A@delta)");
  add("crossed", "psi weak measuring", "(mu@H).(A@psi).(psi@A) = psi.(H@mu)");
  add("crossed", "(mu@H).(A@psi).(nabla@A)", "(mu@H).(A@psi).(nabla@A) = (mu@H).(A@psi)");
  add("crossed", "nabla.(mu@H).(A@psi)", "nabla.(mu@H).(A@psi) = (mu@H).(A@psi)");
  add("crossed", "nabla.psi=psi");
  add("crossed", "(mu@H).(u1@psi).(delta@A)=psi");
  add("crossed", "u1 through psi", "(mu@H).(u1@c).(delta@A) = (mu@H).(A@c).(psi.(H@eta)@A)");
  add("crossed", "(A@eps).nabla=mu.(A@u1)");
  add("crossed", "(A@delta).sigmaLift", "(A@delta).sigmaLift = (sigmaLift@mu).delta_{H@H}");
  add("crossed", "nabla.sigmaLift=sigmaLift");
  add("crossed", "(A@eps).sigmaLift=sigma");
  add("crossed", "sigmaLift.Omega=sigmaLift");
  add("crossed", "c1", "muPsi.(H@nabla) = nabla.muPsi");
  add("crossed", "c11", "muPsi.(H@nabla) = muPsi");
  add("crossed", "aw", "nabla.muSigma.(nabla@H) = nabla.muSigma");
  add("crossed", "aw1", "muSigma.(nabla@H) = muSigma");
  add("crossed", "preunit with psi", "muPsi.(H@nu) = nabla.(eta@H)");
  add("crossed", "preunit on the left", "muSigma.(nu@H) = nabla.(eta@H)");
  add("crossed", "preunit through psi", "(mu@H).(A@psi).(nu@A) = (mu@H).(A@nu)");
  add("crossed", "muBig associative", "muBig.(muBig@AH) = muBig.(AH@muBig)");
  add("crossed", "nabla.muBig=muBig");
  add("crossed", "muBig.(nabla@nabla)=muBig");
  add("crossed", "muBig.(nu@nabla)=nabla");
  add("crossed", "muBig.(nabla@nu)=nabla");
  add("crossed", "A -> A x H injective", "p.(A@eta) has full rank");
  add("crossed", "A -> A x H multiplicative", "i_A.mu = mu_small.(i_A@i_A)");
  add("crossed", "A -> A x H unital", "i_A.eta = unit of A x H");
  add("crossed", "nabla.((mu.(A@u1))@eta)=(A@PiL).nabla");
  add("crossed", "coinvariants are A", "coinvariants of A x H = image of i_A");
  add("crossed", "i.g=(A@PiL).i.g");
  add("crossed", "canonical integral", "f = p.(eta@H) is a comodule morphism");
  add("crossed", "canonical integral total", "f.eta = unit of A x H");
  add("crossed", "sigma against sigmainv along lambda", "((sigma.(H@mu)) * (sigmainv.(mu@H))).(H@lambda@H).(H@delta).delta = u1");
  add("crossed", "smash iff sigma=u2", "sigma = u2 exactly when the product is a smash product");
  add("crossed", "strict iff center-valued", "phi strict <=> sigma factors through Z(A), given (g1)");

  add("cleft2cross", "sigma=p_A.mu.(f@f)", "sigma = p_A.mu.(mu@finv).(f@f@mu).delta_{H@H}");
  add("cleft2cross", "sigma in Reg", "sigma has a Reg inverse");
  add("cleft2cross", "sigmainv is the Reg inverse", "sigmainv = (f.mu)*(mu.c.(finv@finv)) through i_A");
  add("cleft2cross", "sigma=u2 iff f multiplicative");
  add("cleft2cross", "Tinv.i=i_A", "Tinv.i_{A_H x H}.(A_H@eta) = i_A");
  add("cleft2cross", "nabla=(p_A@H).rho.mu.(i_A@f)");
  add("cleft2cross", "canonical finv is the inverse", "canonical finv satisfies (c1)-(c3)");
  add("cleft2cross", "q=p.(A@PiL).i");
  add("cleft2cross", "p_A=(A@eps).i");
  add("cleft2cross", "u1 from sigma and sigmainv", "u1 recovered from sigma and sigmainv matches");
  add("cleft2cross", "phi recovered", "extracted phi equals the original");
  add("cleft2cross", "sigma recovered", "extracted sigma equals the original");
  add("cleft2cross", "shared u1", "u1 = u1'");
  add("cleft2cross", "h.eta=eta");
  add("cleft2cross", "h in Reg", "h has a Reg inverse");
  add("cleft2cross", "phi relation", "phi = mu.(mu@A).(h@phi'@hinv).(H@H@c).(H@delta@A).(delta@A)");
  add("cleft2cross", "sigma relation", "sigma = (h@eps) * (phi'.(H@h)) * sigma' * (hinv.mu)");
  add("cleft2cross", "T.i=i'", "T.i_{AxH} = i_{AxH}' on A");
  add("cleft2cross", "mu.(A@h).sigmaLift", "mu.(A@h).sigmaLift = mu.((mu.(h@phi').(delta@h))@sigma').delta_{H@H}");
  add("cleft2cross", "(nabla@H) against psi", "(nabla'@H).((mu.(h@phi').(delta@A))@delta).(H@c).(delta@A) = (mu@delta).(h@psi').(delta@A)");

  add("cohom", "base system", "the extracted crossed system passes");
  add("cohom", "center action", "the action on Z(A_H) passes");
  add("cohom", "twist lands in the crossed systems", "sigma*(i_Z.tau) is in the enumerated population");
  add("cohom", "untwist recovers tau", "sigmainv*(sigma*(i_Z.tau)) = i_Z.tau");
  add("cohom", "every crossed system is a twist", "twist(untwist(gamma)) = gamma");
  add("cohom", "twist well defined on classes", "cohomologous tau give equivalent systems");
  add("cohom", "twist injective on classes", "distinct classes give inequivalent systems");
  add("cohom", "twist surjective on classes", "every system class is hit");
  add("cohom", "class counts agree", "|H2 classes| = |crossed system classes|");
  return e;
}

}  // namespace

const std::vector<IdentityEntry>& identity_catalog() {
  static const std::vector<IdentityEntry> cat = build();
  return cat;
}

std::string catalog_text() {
  const auto& cat = identity_catalog();
  std::size_t w = 0;
  for (const auto& e : cat) w = std::max(w, e.label.size());
  std::ostringstream os;
  for (const auto& e : cat)
    os << e.module << std::string(12 - std::min<std::size_t>(11, e.module.size()), ' ') << e.label
       << std::string(w + 2 - e.label.size(), ' ') << ": " << e.formula << "\n";
  return os.str();
}

}  // namespace whopf
