#pragma once

#include <cstddef>
#include <cstdint>

// Dense numeric kernels. Every kernel comes in two flavors: the plain
// `*_serial` reference loop and the OpenMP version under the same name
// without the suffix. The parallel versions assign each output element to
// exactly one thread and keep all per-element accumulation orders identical
// to the reference, so results are bit-for-bit equal to the serial ones for
// any thread count. Tests compare the two; the bench tool times them.
namespace mltc::kernels {

// Global switch consulted by the OpenMP versions (on by default when built
// with OpenMP). Mostly useful for benchmarking.
void set_parallel(bool enabled);
bool parallel_enabled();
int max_threads();

// C[m,n] = A[m,k] * B[k,n]
void matmul_nn_serial(const double* a, const double* b, double* c,
                      std::size_t m, std::size_t k, std::size_t n);
void matmul_nn(const double* a, const double* b, double* c,
               std::size_t m, std::size_t k, std::size_t n);

// C[m,n] = A[m,k] * B[n,k]^T
void matmul_nt_serial(const double* a, const double* b, double* c,
                      std::size_t m, std::size_t k, std::size_t n);
void matmul_nt(const double* a, const double* b, double* c,
               std::size_t m, std::size_t k, std::size_t n);

// C[m,n] += A[m,k] * B[k,n]
void matmul_nn_acc_serial(const double* a, const double* b, double* c,
                          std::size_t m, std::size_t k, std::size_t n);
void matmul_nn_acc(const double* a, const double* b, double* c,
                   std::size_t m, std::size_t k, std::size_t n);

// C[m,n] += A[m,k] * B[n,k]^T
void matmul_nt_acc_serial(const double* a, const double* b, double* c,
                          std::size_t m, std::size_t k, std::size_t n);
void matmul_nt_acc(const double* a, const double* b, double* c,
                   std::size_t m, std::size_t k, std::size_t n);

// C[k,n] += A[m,k]^T * B[m,n]
void matmul_tn_acc_serial(const double* a, const double* b, double* c,
                          std::size_t m, std::size_t k, std::size_t n);
void matmul_tn_acc(const double* a, const double* b, double* c,
                   std::size_t m, std::size_t k, std::size_t n);

// Row-wise masked softmax with max subtraction. mask may be null (all kept);
// otherwise mask[i*n+j] != 0 keeps the entry and masked-out entries are set
// to exactly 0. Каждая row must have at least one kept entry (callers check).
void softmax_rows_serial(const double* x, const std::uint8_t* mask, double* out,
                         std::size_t m, std::size_t n);
void softmax_rows(const double* x, const std::uint8_t* mask, double* out,
                  std::size_t m, std::size_t n);

// dx += y * (dy - sum_kept(dy * y)) per row; masked-out entries untouched.
void softmax_rows_bwd_serial(const double* y, const double* dy,
                             const std::uint8_t* mask, double* dx,
                             std::size_t m, std::size_t n);
void softmax_rows_bwd(const double* y, const double* dy,
                      const std::uint8_t* mask, double* dx,
                      std::size_t m, std::size_t n);

// Per-row layer norm: out = gamma * (x - mean)/sqrt(var + eps) + beta.
// xhat and inv_std are saved for the backward pass.
void layer_norm_serial(const double* x, const double* gamma, const double* beta,
                       double eps, double* out, double* xhat, double* inv_std,
                       std::size_t m, std::size_t n);
void layer_norm(const double* x, const double* gamma, const double* beta,
                double eps, double* out, double* xhat, double* inv_std,
                std::size_t m, std::size_t n);

void layer_norm_bwd_serial(const double* xhat, const double* inv_std,
                           const double* gamma, const double* dy, double* dx,
                           double* dgamma, double* dbeta,
                           std::size_t m, std::size_t n);
void layer_norm_bwd(const double* xhat, const double* inv_std,
                    const double* gamma, const double* dy, double* dx,
                    double* dgamma, double* dbeta,
                    std::size_t m, std::size_t n);

// elementwise
void add_serial(const double* a, const double* b, double* out, std::size_t n);
void add(const double* a, const double* b, double* out, std::size_t n);
void sub_serial(const double* a, const double* b, double* out, std::size_t n);
void sub(const double* a, const double* b, double* out, std::size_t n);
void mul_serial(const double* a, const double* b, double* out, std::size_t n);
void mul(const double* a, const double* b, double* out, std::size_t n);
void scale_serial(const double* a, double c, double* out, std::size_t n);
void scale(const double* a, double c, double* out, std::size_t n);
void relu_serial(const double* x, double* out, std::size_t n);
void relu(const double* x, double* out, std::size_t n);
void tanh_serial(const double* x, double* out, std::size_t n);
void tanh(const double* x, double* out, std::size_t n);

// dst += c * a
void axpy_acc_serial(double c, const double* a, double* dst, std::size_t n);
void axpy_acc(double c, const double* a, double* dst, std::size_t n);
// dst += a * b
void mul_acc_serial(const double* a, const double* b, double* dst, std::size_t n);
void mul_acc(const double* a, const double* b, double* dst, std::size_t n);

// Deterministic full reduction: fixed-size blocks are summed independently
// and the partials combined in block order, so the result does not depend on
// the thread count.
double reduce_sum_serial(const double* x, std::size_t n);
double reduce_sum(const double* x, std::size_t n);

// One Adam update over a flat parameter array. t is the 1-based step count
// used for bias correction.
void adam_update_serial(double* p, const double* g, double* m, double* v,
                        std::size_t n, double lr, double beta1, double beta2,
                        double eps, std::size_t t);
void adam_update(double* p, const double* g, double* m, double* v,
                 std::size_t n, double lr, double beta1, double beta2,
                 double eps, std::size_t t);

}  // namespace mltc::kernels
