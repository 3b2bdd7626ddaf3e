"""
Experiment harness: instance batches, seeded campaigns and score tables.
"""
