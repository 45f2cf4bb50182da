#include "delegation/lemmas.hpp"

namespace delegation {

namespace {

LemmaCheck make(std::string name, const Menu& menu) {
  LemmaCheck c;
  c.name = std::move(name);
  c.menu = to_string(menu);
  return c;
}

}  // namespace

LemmaCheck check_decomposition(const Instance& instance, const Menu& menu) {
  LemmaCheck c = make("decomposition", menu);
  const Decomposition d = decompose(instance, menu);
  const XNum f = evaluate(instance, menu).f;
  c.ok = d.sur + d.bdif == f;
  c.detail = "sur=" + to_string(d.sur) + " bdif=" + to_string(d.bdif) +
             " f=" + to_string(f);
  return c;
}

LemmaCheck check_threshold_dominance(const Instance& instance, const Menu& menu) {
  LemmaCheck c = make("threshold_dominance", menu);
  const Decomposition d = decompose(instance, menu);
  const Menu a_u = threshold_menu(instance, d.u_low);
  const XNum f_u = evaluate(instance, a_u).f;
  c.ok = f_u >= d.sur;
  c.detail = "f(A_u)=" + to_string(f_u) + " sur=" + to_string(d.sur);
  return c;
}

LemmaCheck check_single_action(const Instance& instance, const Menu& menu) {
  LemmaCheck c = make("single_action", menu);
  const EvalReport r = evaluate(instance, menu);
  c.ok = true;
  for (const auto& [i, contribution] : r.contrib) {
    const XNum f_i = evaluate(instance, threshold_menu(instance, instance.bias(i))).f;
    if (f_i < contribution) {
      c.ok = false;
      c.detail = "i=" + std::to_string(i) + " f(A_b_i)=" + to_string(f_i) +
                 " < contrib=" + to_string(contribution);
      return c;
    }
  }
  c.detail = std::to_string(r.contrib.size()) + " actions checked";
  return c;
}

std::vector<LemmaCheck> check_derandomization(const Instance& instance,
                                              const Menu& opt_menu) {
  std::vector<LemmaCheck> out;
  for (const auto& tm : threshold_menus(instance)) {
    if (!tm.t) continue;
    const Derandomization d = derandomize_interference(instance, opt_menu, *tm.t);
    LemmaCheck c = make("derandomization", tm.menu);
    c.ok = d.certified;
    c.detail = "t=" + to_string(*tm.t) + " f(A_t)=" + to_string(d.f_threshold) +
               " f(kept+a(t))=" + to_string(d.f_derandomized);
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<LemmaCheck> verify_lemmas(const Instance& instance,
                                      const Menu& opt_menu,
                                      const std::vector<Menu>& menus) {
  std::vector<LemmaCheck> out;
  for (const Menu& m : menus) {
    out.push_back(check_decomposition(instance, m));
    out.push_back(check_threshold_dominance(instance, m));
    out.push_back(check_single_action(instance, m));
  }
  if (instance.is_independent()) {
    auto d = check_derandomization(instance, opt_menu);
    out.insert(out.end(), d.begin(), d.end());
  }
  return out;
}

}  // namespace delegation
