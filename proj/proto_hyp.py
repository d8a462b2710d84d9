import numpy as np
n = 128
k1 = np.fft.fftfreq(n, 1.0/n)
K1, K2 = np.meshgrid(k1, k1, indexing='ij')
mask = (3*np.abs(K1) <= n) & (3*np.abs(K2) <= n)
def dealias(c): return c*mask
def d1(c):
    r = 1j*K1*c; r[n//2,:] = 0; return r
def d2(c):
    r = 1j*K2*c; r[:,n//2] = 0; return r
def to_phys(c): return (np.fft.ifft2(c)*n*n).real
def to_spec(p): return np.fft.fft2(p)/(n*n)
X1, X2 = np.meshgrid(*[(-np.pi + 2*np.pi*np.arange(n)/n)]*2, indexing='ij')
v1p = -np.sin(X1)*np.cos(X2); v2p = np.cos(X1)*np.sin(X2)
def vdotgrad(g):
    return dealias(to_spec(v1p*to_phys(d1(g)) + v2p*to_phys(d2(g))))
def rhs(g): return vdotgrad(vdotgrad(g))
g = to_spec(np.sin(X1)); g = dealias(g)
h = 2*np.pi/n; dt = 0.4*h*h/2.0
t = 0.0; tend = 2.0
def d1g_origin(g):  # spectral sum at x=0
    return np.sum(d1(g)).real
print("d1g(0,0,0) =", d1g_origin(g))
i = 0
import math
while t < tend - 1e-12:
    step = min(dt, tend-t)
    a = rhs(g); b = rhs(g+0.5*step*a); c = rhs(g+0.5*step*b); d = rhs(g+step*c)
    g = g + step/6*(a+2*b+2*c+d)
    t += step; i += 1
    if i % 200 == 0 or t >= tend-1e-12:
        val = d1g_origin(g)
        tail_modes = (np.maximum(np.abs(K1),np.abs(K2)) > (2.0/3.0)*(n/3)) & mask
        en = np.sum(np.abs(g)**2); tail = np.sum(np.abs(g[tail_modes])**2)/max(en,1e-300)
        gmax = np.max(to_phys(g)); gmin = np.min(to_phys(g))
        print(f"t={t:.3f} ratio={val/math.exp(t):.6f} tail={tail:.2e} g in [{gmin:.6f},{gmax:.6f}]", flush=True)
