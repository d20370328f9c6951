// Minimal library walkthrough: build a spoofing scenario, print its bound
// decomposition, then validate the floor with a short Monte-Carlo run.

#include <cstdio>

#include "aoabound/bounds.hpp"
#include "aoabound/estimation.hpp"

int main() {
  using namespace aoabound;

  const ArrayGeometry array(16, 0.5);      // 16 elements, half-wavelength
  const double theta = deg_to_rad(10.0);   // legitimate user direction

  // single spoofing antenna half a degree off the legitimate direction
  const AttackerConfig attacker({{theta + deg_to_rad(0.5), cplx(1.0, 0.0)}});

  std::printf("%8s %14s %14s %14s %14s\n", "SNR(dB)", "CRB", "penalty",
              "MCRB", "MC MSE");
  for (double snr_db = 10.0; snr_db <= 50.0; snr_db += 10.0) {
    const Scenario scenario(array, theta, attacker,
                            snr_db_to_noise_variance(snr_db));
    const BoundReport rep = mcrb(scenario);
    const McResult mc = run_mse(scenario, 500, 42, {}, 0);
    std::printf("%8.0f %14.6e %14.6e %14.6e %14.6e\n", snr_db, rep.crb,
                rep.penalty, rep.mcrb, mc.mse);
  }
  std::printf("\nThe penalty column is SNR-independent: past ~30 dB the MSE "
              "sits on it\nwhile the CRB keeps falling.\n");
  return 0;
}
