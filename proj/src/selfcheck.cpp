#include "qlpf/selfcheck.hpp"

#include "qlpf/error.hpp"
#include "qlpf/random.hpp"
#include "qlpf/script.hpp"

namespace qlpf {

namespace {

void round_trip(Session& session, const Value& v) {
  const std::string text = to_script(v);
  verify(same_value(session.evaluate(text), v), "round-trip failed for " + text);
}

}  // namespace

Json run_selfcheck(const SelfcheckOptions& options) {
  std::mt19937_64 rng(options.seed);
  std::size_t isotropic = 0, modular = 0;
  for (std::size_t trial = 0; trial < options.instances; ++trial) {
    const std::uint32_t p = trial % 2 ? 3 : 2;
    Session session;
    session.run("field GF(" + std::to_string(p) + ")(x,y,z)");
    const Field& f = session.field();

    std::vector<RatFunc> c;
    std::uniform_int_distribution<int> dim(1, 5);
    for (int i = dim(rng); i > 0; --i) c.push_back(random_ratfunc(f, rng, 2, 2, 0.2));
    QuasiPForm phi(f, c);
    std::vector<ExtensionSpec::Generator> g;
    std::uniform_int_distribution<std::uint32_t> n(1, 3);
    for (int i = 0; i < 2; ++i) g.emplace_back(random_ratfunc(f, rng, 2, 2, 0.1), n(rng));
    ExtensionSpec spec(f, g);

    for (const auto& e : c) round_trip(session, e);
    round_trip(session, phi);
    round_trip(session, spec);
    round_trip(session, c);

    // extended_core verifies its tensor-formula and greedy routes internally
    const RelativeDecomposition core = extended_core(phi, spec, options.exec);
    isotropic += core.defect > 0;
    if (is_p_independent(spec.elements())) {
      ++modular;
      const std::size_t direct = direct_defect_modular(phi, spec, options.exec);
      verify(direct == core.defect, "direct modular defect " + std::to_string(direct) + " != " +
                                        std::to_string(core.defect) + " for " + to_string(phi) + " over " +
                                        to_display(spec));
    }
  }
  return Json{{"command", "selfcheck"},
              {"seed", options.seed},
              {"instances", options.instances},
              {"modular_instances", modular},
              {"isotropic_instances", isotropic},
              {"failures", 0}};
}

}  // namespace qlpf
