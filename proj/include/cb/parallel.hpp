#pragma once

namespace cb {

// Worker count honoring the CB_THREADS environment cap; 1 without OpenMP.
int worker_threads();
void set_worker_threads(int n);

enum class Exec { Serial, Parallel };

}  // namespace cb
