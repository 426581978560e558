#include "residua/cost.hpp"

namespace residua::cost {

namespace {
thread_local Meter* g_active = nullptr;
}

Meter::Meter(Bigint n, Bigint n_sq) : n_(std::move(n)), n_sq_(std::move(n_sq)), prev_(g_active) {
  g_active = this;
}

Meter::~Meter() { g_active = prev_; }

void Meter::note_pow(const Bigint& modulus) {
  for (Meter* m = g_active; m != nullptr; m = m->prev_) {
    if (modulus == m->n_sq_)
      ++m->counts_.exp_mod_nsq;
    else if (modulus == m->n_)
      ++m->counts_.exp_mod_n;
  }
}

void Meter::note_inv(const Bigint& modulus) {
  for (Meter* m = g_active; m != nullptr; m = m->prev_) {
    if (modulus == m->n_sq_)
      ++m->counts_.inv_mod_nsq;
    else if (modulus == m->n_)
      ++m->counts_.inv_mod_n;
  }
}

}  // namespace residua::cost
