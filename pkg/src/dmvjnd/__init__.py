"""Per-image noise tolerance modeling for a committee of image classifiers.

The pipeline learns, for each image, the largest noise pattern that leaves
the predictions of four frozen CIFAR-10 classifiers unchanged, with a
CAM-guided strategy restraining the noise's magnitude and spatial layout.
"""

__version__ = "0.1.0"
