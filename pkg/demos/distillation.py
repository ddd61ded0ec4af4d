"""Reward distillation from a larger frozen teacher into a small student.

The teacher is trained first; the student then adds
``d_coef * MSE(teacher reward, student reward)`` to its own losses.  At
``d_coef=0`` the run is bitwise identical to plain training, and the
teacher's parameters never change.

    python demos/distillation.py
"""
import numpy as np

from tdopt import envs
from tdopt.data import generate_dataset
from tdopt.distiller import Distiller, TeacherHandle
from tdopt.trainer import TrainConfig, Trainer
from tdopt.world_model import ModelConfig, WorldModel

tasks = envs.mt5_mini()
ds = generate_dataset(tasks, "random", 10, seed=0)
student_cfg = ModelConfig(latent_dim=16, hidden_dim=32, n_hidden=1, simnorm_group=4, task_dim=4)
teacher_cfg = ModelConfig(latent_dim=32, hidden_dim=64, n_hidden=2, simnorm_group=4, task_dim=4)

teacher = WorldModel.init(teacher_cfg, tasks, 1)
Trainer(teacher, TrainConfig(batch_size=64, lr=1e-3, seed=1), ds).run(300)
handle = TeacherHandle(teacher)
print(f"teacher: {teacher.parameter_count()} parameters, hash {handle.hash[:12]}")


def student(d_coef, mode="reward-only", steps=150):
    m = WorldModel.init(student_cfg, tasks, 0)
    dist = Distiller(handle, mode, seed=0, pca_samples=1024) if d_coef or mode != "reward-only" else None
    hist = Trainer(m, TrainConfig(batch_size=64, lr=1e-3, d_coef=d_coef), ds, dist).run(steps)
    return m, hist


plain, _ = student(0.0)
zero, _ = student(0.0, mode="reward+linear")
print(f"\nd_coef=0 with a teacher matches no teacher bitwise: {zero.param_hash() == plain.param_hash()}")

print("\nmeans over the last 10 steps")
print("mode            d_coef      reward       distill   total")
for mode, d in [("reward-only", 0.0), ("reward-only", 0.4), ("reward-only", 0.9),
                ("reward+linear", 0.4), ("reward+pca", 0.4)]:
    _, hist = student(d, mode)
    print(f"{mode:14s}  {d:5.2f}   {np.mean([h.reward for h in hist[-10:]]):10.4f}"
          f"   {np.mean([h.distill for h in hist[-10:]]):11.4f}   {np.mean([h.total for h in hist[-10:]]):.4f}")

print(f"\nteacher unchanged after all runs: {handle.verify()}")
