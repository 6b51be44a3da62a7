#include "mslopes/oracle.hpp"

#include "mslopes/invariants.hpp"

namespace mslopes {

namespace {

std::string describe(const KnotSpec& k, const std::vector<std::size_t>& choice, const std::string& what) {
  std::string s = k.str() + " system(";
  for (std::size_t i = 0; i < choice.size(); ++i) s += (i ? "," : "") + std::to_string(choice[i]);
  return s + "): " + what;
}

}  // namespace

OracleOutcome integration_oracle(const std::vector<KnotSpec>& suite) {
  OracleOutcome out{"integration", 0, std::nullopt};
  for (const KnotSpec& k : suite) {
    KnotCatalog cat(k);
    for (const BasicSystem& b : cat.enumerate_basic_systems()) {
      Fraction a = twist(b), c = twist_by_integration(b.paths);
      ++out.checked;
      if (a != c && !out.counterexample)
        out.counterexample = describe(k, b.choice, "basic twist " + a.str() + " vs integral " + c.str());
      for (const EdgepathSystem& s : type_I_systems(b)) {
        Fraction x = twist(s), y = twist_by_integration(b.paths, s.cut_u);
        ++out.checked;
        if (x != y && !out.counterexample)
          out.counterexample = describe(k, b.choice, "type I at u0=" + s.cut_u->str() + " twist " + x.str() +
                                                         " vs integral " + y.str());
      }
    }
  }
  return out;
}

OracleOutcome lv_oracle(const std::vector<KnotSpec>& suite) {
  OracleOutcome out{"lv", 0, std::nullopt};
  for (const KnotSpec& k : suite) {
    KnotCatalog cat(k);
    const Fraction td = twist(cat.dec());
    for (const BasicSystem& b : cat.enumerate_basic_systems()) {
      int lv = 0;
      for (std::size_t i = 0; i < b.choice.size(); ++i) {
        LVCount c = cat.lv(i, b.choice[i]);
        lv += c.L + c.V;
      }
      Fraction want = td - Fraction(2 * lv), got = twist(b);
      ++out.checked;
      if (want != got && !out.counterexample)
        out.counterexample = describe(k, b.choice, "twist " + got.str() + " vs tau_dec - 2(L+V) = " + want.str());
    }
  }
  return out;
}

OracleOutcome remainder_oracle(const std::vector<KnotSpec>& suite) {
  OracleOutcome out{"remainder", 0, std::nullopt};
  for (const KnotSpec& k : suite) {
    KnotCatalog cat(k);
    for (const EdgepathSystem& s : enumerate_candidates(cat, {0, false})) {
      Fraction a = remainder(s), b = remainder_closed_form(s);
      ++out.checked;
      if (a != b && !out.counterexample)
        out.counterexample = describe(k, s.basic_choice, std::string("type ") + to_string(s.type) + " rho " +
                                                             a.str() + " vs closed form " + b.str());
    }
  }
  return out;
}

}  // namespace mslopes
