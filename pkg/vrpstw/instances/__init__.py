"""
Test-instance tooling: α;β;γ;δ classification, the seeded generator and the
line-oriented instance file format.

Import from the submodules directly (`vrpstw.instances.spec`,
`vrpstw.instances.generator`, `vrpstw.instances.io`). The model package
imports InstanceSpec, so nothing is imported here.
"""
