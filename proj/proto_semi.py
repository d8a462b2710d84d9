import numpy as np
n = 64
k1 = np.fft.fftfreq(n, 1.0/n)
K1, K2 = np.meshgrid(k1, k1, indexing='ij')
K2sq = K1**2+K2**2
mask = (3*np.abs(K1) <= n) & (3*np.abs(K2) <= n)
def dealias(c): return c*mask
def d1(c):
    r = 1j*K1*c; r[n//2,:] = 0; return r
def d2(c):
    r = 1j*K2*c; r[:,n//2] = 0; return r
def to_phys(c): return (np.fft.ifft2(c)*n*n).real
def to_spec(p): return np.fft.fft2(p)/(n*n)
def prod(ap, b): return dealias(to_spec(ap*to_phys(b)))
def invlap(c):
    r = np.where(K2sq>0, c/np.where(K2sq>0,K2sq,1), 0); return r
X1, X2 = np.meshgrid(*[(-np.pi + 2*np.pi*np.arange(n)/n)]*2, indexing='ij')
a_p = 0.01*np.sin(X2)
d2a_p = 0.01*np.cos(X2)
one_a2 = (1+a_p)**2
def L(f):
    pL = 2*invlap(prod(d2a_p, d1(f[1])))   # p_L = 2 (-Lap)^{-1} (d2a d1f2)
    t1 = [prod(one_a2, d1(d1(f[i]))) for i in range(2)]
    gpL = [d1(pL), d2(pL)]
    t2 = [prod(1+a_p, d1(gpL[i])) for i in range(2)]
    t3 = prod(d2a_p, d2(pL))
    return [t1[0]+t2[0]-t3, t1[1]+t2[1]]
rng = np.random.default_rng(11)
f = []
for i in range(2):
    c = rng.standard_normal((n,n)) + 1j*rng.standard_normal((n,n))
    c *= (np.sqrt(K2sq) <= 8)
    f.append(c)
# project: divergence-free and no k1=0 content
kd = K1*f[0]+K2*f[1]
lam = np.where(K2sq>0, kd/np.where(K2sq>0,K2sq,1), 0)
f = [f[0]-K1*lam, f[1]-K2*lam]
f = [np.where(K1==0, 0, c) for c in f]
f = [to_spec(to_phys(c)) for c in f]  # hermitianize
f = [np.where(K1==0, 0, dealias(c)) for c in f]
def hk(f, s=4):
    return np.sqrt((2*np.pi)**2*sum(np.sum(np.where(K2sq>0,K2sq**s,0)*np.abs(c)**2) for c in f))
dt = 0.004; t = 0.0
ts = [0.0]; ns = [hk(f)]
while t < 3.0-1e-12:
    a = L(f); b = L([f[i]+0.5*dt*a[i] for i in range(2)]); c = L([f[i]+0.5*dt*b[i] for i in range(2)]); d = L([f[i]+dt*c[i] for i in range(2)])
    f = [f[i]+dt/6*(a[i]+2*b[i]+2*c[i]+d[i]) for i in range(2)]
    t += dt
    ts.append(t); ns.append(hk(f))
import numpy.polynomial.polynomial as P
slope = np.polyfit(ts, np.log(ns), 1)[0]
print("fitted rate over [0,3]:", slope, " (need <= -0.5);  ||f||_H4: ", ns[0], "->", ns[-1])
# single-mode exact-rate check: f = single k1=+-1 mode, a=0
for kk1 in (1,2):
    g = [np.zeros((n,n),complex), np.zeros((n,n),complex)]
    # div-free single mode: f = grad-perp(sin(k x1)) = (0, k cos(k x1)) -> f2 only
    g[1][kk1,0] = 0.5; g[1][-kk1%n,0] = 0.5
    a_p0 = 0*a_p; d2a_p0 = 0*d2a_p; one_a20 = (1+a_p0)**2
    def L0(f):
        pL = 2*invlap(prod(d2a_p0, d1(f[1])))
        t1 = [prod(one_a20, d1(d1(f[i]))) for i in range(2)]
        gpL = [d1(pL), d2(pL)]
        t2 = [prod(1+a_p0, d1(gpL[i])) for i in range(2)]
        t3 = prod(d2a_p0, d2(pL))
        return [t1[0]+t2[0]-t3, t1[1]+t2[1]]
    dt0 = 1e-4
    a = L0(g); b = L0([g[i]+0.5*dt0*a[i] for i in range(2)]); c = L0([g[i]+0.5*dt0*b[i] for i in range(2)]); d = L0([g[i]+dt0*c[i] for i in range(2)])
    g1 = [g[i]+dt0/6*(a[i]+2*b[i]+2*c[i]+d[i]) for i in range(2)]
    rate = np.log(hk(g1,4)/hk(g,4))/dt0
    print(f"single-mode k1={kk1}: one-step rate = {rate:.14f} err={abs(rate+kk1**2):.2e}")
