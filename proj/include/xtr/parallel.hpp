#pragma once

namespace xtr {

/// Worker count used by the OpenMP kernels. Verdicts, witnesses and reports
/// never depend on it.
void set_threads(int threads);
int thread_count();

}  // namespace xtr
